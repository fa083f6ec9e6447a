#include "meinardus/saddle.hpp"

#include <algorithm>
#include <cmath>

#include "meinardus/detail/kernels.hpp"
#include "meinardus/error.hpp"

namespace meinardus {

namespace {

constexpr std::size_t kMaxDepth = 50'000'000;

double growth_of(const WeightedModel& model) { return model.growth_exponent() + 1.0; }

// Lambda table that grows on demand.
class LambdaCache {
 public:
  explicit LambdaCache(const WeightedModel& model) : model_(model) {}

  const std::vector<double>& upto(std::size_t K) {
    if (K > kMaxDepth)
      throw Error(ErrorKind::TruncationTooShallow, "truncation depth " + std::to_string(K) + " above the cap");
    if (values_.size() <= K) values_ = lambda_double(model_, std::max(K, 2 * values_.size()));
    return values_;
  }

 private:
  const WeightedModel& model_;
  std::vector<double> values_;
};

}  // namespace

std::vector<double> lambda_double(const WeightedModel& model, std::size_t K) {
  return detail::lambda_sieve<double>(model, K, 53);
}

std::size_t truncation_depth(double delta, double tol) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  const double K = std::ceil(2.0 / delta * std::log(1.0 / tol));
  if (!(K < static_cast<double>(kMaxDepth)))
    throw Error(ErrorKind::TruncationTooShallow, "delta too small for a finite truncation");
  return std::max<std::size_t>(1, static_cast<std::size_t>(K));
}

double lambda_moment(const std::vector<double>& lambda, double delta, std::size_t K, int m) {
  if (lambda.size() <= K) throw Error(ErrorKind::TruncationTooShallow, "Lambda table shorter than K");
  const long double x = std::exp(-static_cast<long double>(delta));
  long double p = 1.0L, sum = 0.0L;
  for (std::size_t k = 1; k <= K; ++k) {
    p *= x;
    if (p == 0.0L) break;
    if (lambda[k] == 0.0) continue;
    long double km = 1.0L;
    for (int i = 0; i < m; ++i) km *= static_cast<long double>(k);
    sum += km * static_cast<long double>(lambda[k]) * p;
  }
  return static_cast<double>(sum);
}

double lambda_tail_bound(const std::vector<double>& lambda, double delta, std::size_t K, int m, double g) {
  double C = 0.0;
  const std::size_t top = std::min(K, lambda.size() - 1);
  for (std::size_t k = 1; k <= top; ++k) C = std::max(C, std::fabs(lambda[k]) / std::pow(static_cast<double>(k), g));
  if (C == 0.0) return 0.0;
  const double k1 = static_cast<double>(K + 1);
  const double e = static_cast<double>(m) + g;
  const double r = std::pow(1.0 + 1.0 / k1, e) * std::exp(-delta);
  if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
  const double first = C * std::exp(e * std::log(k1) - k1 * delta);
  return first / (1.0 - r);
}

double khintchine_lhs(const std::vector<double>& lambda, double delta, std::size_t K, double tail_tol, double g) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  const double value = lambda_moment(lambda, delta, K, 1);
  if (std::isfinite(tail_tol)) {
    const double tail = lambda_tail_bound(lambda, delta, K, 1, g);
    if (tail > tail_tol)
      throw Error(ErrorKind::TruncationTooShallow, "Khintchine tail bound " + std::to_string(tail) + " above tolerance");
  }
  return value;
}

double asymptotic_delta(const AsymptoticProfile& profile, double n) {
  const double rho = profile.rho_r();
  return std::pow(rho * profile.h_r(), 1.0 / (rho + 1.0)) * std::pow(n, -1.0 / (rho + 1.0));
}

SaddleSolution solve_khintchine(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  LambdaCache cache(model);
  {
    const auto& head = cache.upto(4096);
    if (std::none_of(head.begin() + 1, head.end(), [](double v) { return v > 0.0; }))
      throw Error(ErrorKind::NoPositiveMass, "Lambda_k has no positive entry (all weights vanish)");
  }
  const double target = static_cast<double>(n);
  const double g = growth_of(model);

  SaddleSolution sol;
  sol.n = n;
  int evals = 0;
  auto F = [&](double delta) {
    const std::size_t K = truncation_depth(delta, ctx.tol);
    ++evals;
    return khintchine_lhs(cache.upto(K), delta, K, ctx.tol * target, g) - target;
  };
  auto F2 = [&](double delta) {  // -dF/ddelta
    const std::size_t K = truncation_depth(delta, ctx.tol);
    return lambda_moment(cache.upto(K), delta, K, 2);
  };

  double lo, hi;  // F(lo) >= 0 >= F(hi)
  if (model.profile) {
    const double a = asymptotic_delta(*model.profile, target);
    lo = a / 8.0;
    hi = a * 8.0;
    while (F(hi) > 0.0) hi *= 2.0;
    while (F(lo) < 0.0) {
      lo /= 2.0;
      if (lo < 1e-12) throw Error(ErrorKind::TruncationTooShallow, "no sign change above delta = 1e-12");
    }
  } else {
    hi = 50.0;
    while (F(hi) > 0.0) hi *= 2.0;
    lo = hi;
    while (F(lo) < 0.0) {
      hi = lo;
      lo /= 2.0;
      if (lo < 1e-12) throw Error(ErrorKind::TruncationTooShallow, "no sign change above delta = 1e-12");
    }
  }

  // coarse bisection in log delta
  while (hi / lo > 1.0 + 1e-3) {
    const double mid = std::sqrt(lo * hi);
    (F(mid) > 0.0 ? lo : hi) = mid;
  }

  double delta = std::sqrt(lo * hi);
  double r = F(delta);
  bool newton_ok = false;
  for (int it = 0; it < 30; ++it) {
    if (std::fabs(r) <= 1e-13 * target) {
      newton_ok = true;
      break;
    }
    (r > 0.0 ? lo : hi) = delta;
    double next = delta + r / F2(delta);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == delta) {
      newton_ok = std::fabs(r) <= 1e-9 * target;
      break;
    }
    delta = next;
    r = F(delta);
  }
  if (!newton_ok && std::fabs(r) <= 1e-9 * target) newton_ok = true;
  sol.method = newton_ok ? SaddleMethod::NewtonPolished : SaddleMethod::Bisection;
  for (int it = 0; !newton_ok && it < 200 && std::fabs(r) > 1e-9 * target; ++it) {
    (r > 0.0 ? lo : hi) = delta;
    delta = 0.5 * (lo + hi);
    r = F(delta);
  }
  sol.delta = delta;
  sol.residual = r;
  sol.K = truncation_depth(delta, ctx.tol);
  sol.iterations = evals;
  return sol;
}

TiltedMoments tilted_moments(const WeightedModel& model, double delta, std::size_t K) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  const auto lambda = lambda_double(model, K);
  TiltedMoments m;
  m.delta = delta;
  m.K = K;
  m.mean = lambda_moment(lambda, delta, K, 1);
  m.variance = lambda_moment(lambda, delta, K, 2);
  m.third = lambda_moment(lambda, delta, K, 3);
  const double g = growth_of(model);
  const double tail = lambda_tail_bound(lambda, delta, K, 3, g);
  if (tail > 1e-10 * std::fabs(m.third) + 1e-300)
    throw Error(ErrorKind::TruncationTooShallow, "K = " + std::to_string(K) + " too small for delta = " +
                                                     std::to_string(delta));
  return m;
}

TiltedMoments tilted_moments_factorwise(const WeightedModel& model, double delta, std::size_t K) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  const auto xi = detail::log_coefficients<double>(model.inner, K, 53);
  const auto b = detail::sequence_values<double>(model.weights, K, 53);
  const auto a = detail::sequence_values<double>(model.frequencies, K, 53);
  TiltedMoments m;
  m.delta = delta;
  m.K = K;
  long double mean = 0, var = 0, third = 0;
  for (std::size_t k = 1; k <= K; ++k) {
    if (b[k] == 0.0) continue;
    const std::size_t J = K / k;
    // coefficients of S(a w)^b = exp(b sum xi_i a^i w^i)
    std::vector<double> ig(J + 1, 0.0), E(J + 1, 0.0);
    double apow = 1.0;
    for (std::size_t i = 1; i <= J; ++i) {
      apow *= a[k];
      ig[i] = static_cast<double>(i) * b[k] * xi[i] * apow;
    }
    E[0] = 1.0;
    for (std::size_t j = 1; j <= J; ++j) {
      long double acc = 0;
      for (std::size_t i = 1; i <= j; ++i) acc += static_cast<long double>(ig[i]) * E[j - i];
      E[j] = static_cast<double>(acc / static_cast<long double>(j));
    }
    const long double x = std::exp(-static_cast<long double>(delta) * static_cast<long double>(k));
    long double Z = 0, m1 = 0, p = 1;
    std::vector<long double> w(J + 1);
    for (std::size_t j = 0; j <= J; ++j) {
      w[j] = E[j] * p;
      Z += w[j];
      m1 += w[j] * static_cast<long double>(j * k);
      p *= x;
    }
    m1 /= Z;
    long double c2 = 0, c3 = 0;
    for (std::size_t j = 0; j <= J; ++j) {
      const long double dev = static_cast<long double>(j * k) - m1;
      c2 += w[j] * dev * dev;
      c3 += w[j] * dev * dev * dev;
    }
    mean += m1;
    var += c2 / Z;
    third += c3 / Z;
  }
  m.mean = static_cast<double>(mean);
  m.variance = static_cast<double>(var);
  m.third = static_cast<double>(third);
  return m;
}

}  // namespace meinardus
