#include "meinardus/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "meinardus/dirichlet.hpp"
#include "meinardus/error.hpp"
#include "meinardus/saddle.hpp"

namespace meinardus {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::string to_string(EstimateVariant v) {
  return v == EstimateVariant::PureAsymptotic ? "pure" : "semi-exact";
}

EstimateVariant parse_variant(const std::string& s) {
  if (s == "pure" || s == "PureAsymptotic" || s == "pure-asymptotic") return EstimateVariant::PureAsymptotic;
  if (s == "semi-exact" || s == "SemiExact" || s == "semi") return EstimateVariant::SemiExact;
  throw Error(ErrorKind::InvalidArgument, "unknown estimate variant '" + s + "' (pure | semi-exact)");
}

double log_gen_fn_direct(const WeightedModel& model, double delta, std::size_t K, double tol) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  const auto lambda = lambda_double(model, K);
  const double tail = lambda_tail_bound(lambda, delta, K, 0, model.growth_exponent() + 1.0);
  if (tail > tol)
    throw Error(ErrorKind::TruncationTooShallow,
                "tail bound " + std::to_string(tail) + " at K = " + std::to_string(K) + " exceeds " + std::to_string(tol));
  return lambda_moment(lambda, delta, K, 0);
}

double log_gen_fn_residue(const AsymptoticProfile& profile, double delta, std::size_t L) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  double v = 0.0;
  for (std::size_t l = 0; l < profile.poles.size(); ++l) v += profile.h(l) * std::pow(delta, -profile.poles[l].rho);
  v += profile.h0 - profile.A0 * std::log(delta);
  v += delta_remainder(profile, delta, L).real();
  return v;
}

GenFnEvaluation evaluate_gen_fn(const WeightedModel& model, double delta, std::size_t L, const PrecisionContext& ctx) {
  if (!model.profile) throw Error(ErrorKind::MissingProfile, "model '" + model.name + "' has no analytic profile");
  GenFnEvaluation g;
  g.delta = delta;
  g.K_used = truncation_depth(delta, ctx.tol);
  g.L_used = std::min(L, model.profile->L());
  g.log_value_direct = log_gen_fn_direct(model, delta, g.K_used);
  g.log_value_residue = log_gen_fn_residue(*model.profile, delta, g.L_used);
  g.gap = g.log_value_direct - g.log_value_residue;
  return g;
}

double hardy_expansion(double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  return zeta_real(2.0) / delta + 0.5 * std::log(delta) + zeta_prime_zero() - delta / 24.0;
}

double hardy_residual_bound(double delta) { return std::exp(-kTwoPi * kTwoPi / delta); }

std::optional<double> exact_log_cn(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx) {
  const auto e = enumerate_exact(model, n, ctx);
  const BigFloat& c = e.series.coeffs[n];
  if (c.sign() <= 0) return std::nullopt;
  return c.log_abs();
}

EnumerationReport estimate_cn(const WeightedModel& model, std::uint64_t n, EstimateVariant variant,
                              const PrecisionContext& ctx, bool compare_exact) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (variant == EstimateVariant::PureAsymptotic && !model.profile)
    throw Error(ErrorKind::MissingProfile, "model '" + model.name + "' has no analytic profile");

  const auto sol = solve_khintchine(model, n, ctx);
  const double delta = sol.delta;
  EnumerationReport r;
  r.n = n;
  r.delta = delta;
  r.variant = variant;
  r.components.n_delta = static_cast<double>(n) * delta;

  if (variant == EstimateVariant::SemiExact) {
    const auto lambda = lambda_double(model, sol.K);
    r.components.log_gen_fn = lambda_moment(lambda, delta, sol.K, 0);
    r.variance = lambda_moment(lambda, delta, sol.K, 2);
  } else {
    const auto& prof = *model.profile;
    r.L_used = std::min(kDefaultDeltaL, prof.L());
    r.components.log_gen_fn = log_gen_fn_residue(prof, delta, r.L_used);
    const double rho = prof.rho_r();
    const double K2 = prof.h_r() * rho * (rho + 1.0);
    r.variance = K2 * std::pow(delta, -rho - 2.0);
    if (prof.L() > r.L_used) {
      const std::size_t l = r.L_used + 1;
      r.delta_tail = std::fabs(prof.delta_coeffs[l - 1]) * std::pow(delta, static_cast<double>(l)) /
                     std::tgamma(static_cast<double>(l) + 1.0);
    }
  }
  r.components.gaussian = -0.5 * std::log(kTwoPi * r.variance);
  r.log_cn_estimate = r.components.n_delta + r.components.log_gen_fn + r.components.gaussian;

  if (compare_exact && n <= kEnumerationCap) {
    r.log_cn_exact = exact_log_cn(model, n, ctx);
    if (r.log_cn_exact) {
      const double diff = r.log_cn_estimate - *r.log_cn_exact;
      r.ratio = diff > 700.0 ? HUGE_VAL : std::exp(diff);
    }
  }
  return r;
}

}  // namespace meinardus
