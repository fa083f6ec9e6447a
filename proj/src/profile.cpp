#include "meinardus/profile.hpp"

#include <cmath>

#include "meinardus/error.hpp"

namespace meinardus {

double AsymptoticProfile::h(std::size_t l) const {
  const Pole& p = poles.at(l);
  return p.residue * std::tgamma(p.rho);
}

void AsymptoticProfile::validate() const {
  if (poles.empty()) throw Error(ErrorKind::ValidationError, "profile has no poles");
  double prev = 0.0;
  for (const auto& p : poles) {
    if (!(p.rho > prev))
      throw Error(ErrorKind::ValidationError, "profile poles must be positive and strictly increasing");
    if (!(p.residue > 0.0)) throw Error(ErrorKind::ValidationError, "profile residues must be positive");
    prev = p.rho;
  }
  if (!std::isfinite(A0) || !std::isfinite(h0)) throw Error(ErrorKind::ValidationError, "profile A0/h0 not finite");
  for (double d : delta_coeffs)
    if (!std::isfinite(d)) throw Error(ErrorKind::ValidationError, "profile D(-l) not finite");
}

}  // namespace meinardus
