#pragma once

// Local limit machinery for Z_n = Y_1 + ... + Y_n: the gcd-support and
// weight-mass conditions, case A/B classification, exact P(Z_n = n) from
// c_n, the characteristic function and the split Fourier integral.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meinardus/models.hpp"
#include "meinardus/series.hpp"

namespace meinardus {

enum class NlltCase { A, B, NotApplicable };
std::string to_string(NlltCase c);

enum class GrowthClass { Vanishing, LogN, Log2N, Power };
std::string to_string(GrowthClass g);

struct MassPoint {
  std::uint64_t n = 0;
  double mass = 0.0;
};

struct QCheck {
  int q = 0;
  std::vector<MassPoint> masses;
  GrowthClass fitted = GrowthClass::Vanishing;
  double fitted_constant = 0.0;
  double inf_ratio = 0.0;  // min_n mass_n / g(n), g the case requirement
  double slope = 0.0;      // d log(mass_n / g(n)) / d log log n over the grid
  bool passes = false;
  std::optional<double> probe_log_abs;  // log |phi_n(1/q)| at the probe n
};

struct RatioPoint {
  std::uint64_t n = 0;
  double prob = 0.0;      // P(Z_n = n)
  double variance = 0.0;  // Var Z_n
  double ratio = 0.0;     // sqrt(2 pi Var Z_n) P(Z_n = n)
};

struct NlltReport {
  std::uint64_t gcd_support = 1;
  NlltCase nllt_case = NlltCase::NotApplicable;
  std::vector<QCheck> per_q;
  bool condition_holds = false;
  std::vector<int> offending_q;
  std::vector<RatioPoint> ratio_series;
  std::optional<std::uint64_t> probe_n;
  std::vector<std::string> notes;
};

struct CharFnSample {
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::complex<double> value;
  double log_abs = 0.0;
};

struct IntegralCheck {
  std::uint64_t n = 0;
  double delta = 0.0;
  double alpha0 = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
  double total = 0.0;
  double abs_error = 0.0;   // summed quadrature error estimates
  double gaussian = 0.0;    // 1 / sqrt(2 pi Var Z_n)
  std::size_t pieces = 0;
};

enum class LogPath { ClosedForm, XiSeries };

// log S(w) for |w| < 1. ClosedForm uses log N(w) - log(1 - w^T) (principal
// branches); XiSeries sums xi_j w^j until the terms fall below 1e-18.
std::complex<double> log_inner(const InnerSeriesSpec& inner, std::complex<double> w, LogPath path);

// gcd{j <= Jmax : d_j > 0}. Throws Unstabilized when the support pattern is
// not certified within Jmax and the gcd is still above 1.
std::uint64_t gcd_support(const InnerSeriesSpec& inner, std::size_t Jmax);

// sum_{k<=n, q does not divide k} b_k.
double weight_mass(const WeightedModel& model, std::uint64_t n, int q);

NlltCase classify_case(const InnerSeriesSpec& inner);

// log f_n(e^-delta) = sum_{k<=n} b_k log S(a_k e^{-k delta}).
double log_truncated_gen_fn(const WeightedModel& model, std::uint64_t n, double delta);

// Var Z_n = sum_{k<=n} b_k sum_j (kj)^2 xi_j a_k^j e^{-delta k j}.
double variance_Zn(const WeightedModel& model, std::uint64_t n, double delta);

// P(Z_n = n) = c_n e^{-n delta_n} / f_n(e^{-delta_n}). Throws OutOfRange when
// the result leaves [0, 1 + tol].
double prob_exact(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx = {});
// Same with c_n supplied (log c_n, or nullopt for c_n = 0) and delta fixed.
double prob_from_log_cn(const WeightedModel& model, std::uint64_t n, double delta, std::optional<double> log_cn,
                        double tol = 1e-9);

// phi_n(alpha) for |alpha| <= 1/2.
CharFnSample char_fn(const WeightedModel& model, std::uint64_t n, double delta, double alpha);

// log(S^2(x) / |S(x e^{2 pi i alpha k})|^2) with x = a_k e^{-k delta}.
double u_term(const WeightedModel& model, std::uint64_t n, std::uint64_t k, double alpha, double delta,
              LogPath path = LogPath::ClosedForm);

// alpha0 = delta^{(rho+2)/2} log n, clipped to 1/2.
double split_point(const WeightedModel& model, std::uint64_t n, double delta);

// I1 over |alpha| <= alpha0 and I2 over the rest of [-1/2, 1/2]. Throws
// QuadratureNotConverged.
IntegralCheck integral_check(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx = {});

// min over sampled alpha in [alpha0, 1/2] of -log |phi_n(alpha)|.
double min_log_decay(const WeightedModel& model, std::uint64_t n, double delta, std::size_t samples = 2000);

struct NlltOptions {
  int q_max = 12;
  std::uint64_t ratio_cap = 5000;  // ratio series only for n <= ratio_cap
  bool probes = true;
};

NlltReport check_nllt(const WeightedModel& model, const std::vector<std::uint64_t>& n_grid,
                      const NlltOptions& opts = {}, const PrecisionContext& ctx = {});

}  // namespace meinardus
