#pragma once

#include <cstddef>
#include <vector>

namespace meinardus {

struct Pole {
  double rho = 0.0;      // location of a simple positive pole of D(s)
  double residue = 0.0;  // A_l > 0

  bool operator==(const Pole&) const = default;
};

// Analytic data of an exponential model near delta = 0:
//
//   log f(e^-t) = sum_l h_l t^-rho_l + h0 - A0 log t + Delta(t),
//   h_l = A_l Gamma(rho_l),   Delta(t) = sum_{l>=1} (-1)^l D(-l) t^l / l!.
//
// A0 is the coefficient in the "-A0 log t" convention, so ordinary partitions
// carry A0 = zeta(0) = -1/2.
struct AsymptoticProfile {
  std::vector<Pole> poles;           // strictly increasing in rho
  double A0 = 0.0;
  double h0 = 0.0;
  std::vector<double> delta_coeffs;  // D(-1), D(-2), ..., D(-L)

  std::size_t L() const { return delta_coeffs.size(); }
  const Pole& rightmost() const { return poles.back(); }
  double h(std::size_t l) const;  // A_l Gamma(rho_l), 0-based pole index
  double rho_r() const { return rightmost().rho; }
  double h_r() const { return h(poles.size() - 1); }

  // Throws ValidationError when the poles are not strictly increasing and
  // positive or a residue is not positive.
  void validate() const;

  bool operator==(const AsymptoticProfile&) const = default;
};

}  // namespace meinardus
