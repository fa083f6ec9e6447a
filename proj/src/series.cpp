#include "meinardus/series.hpp"

#include <cmath>

#include "meinardus/detail/kernels.hpp"
#include "meinardus/error.hpp"

namespace meinardus {

void PrecisionContext::validate() const {
  if (bits < 64) throw Error(ErrorKind::InvalidArgument, "precision must be at least 64 bits");
  if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorKind::InvalidArgument, "tol must lie in (0, 1)");
}

LogCoefficients log_series(const PowerSeries& d) {
  if (d.coeffs.empty() || !(d.coeffs[0] == BigFloat(1.0, d.coeffs[0].bits())))
    throw Error(ErrorKind::NonUnitConstantTerm, "log of a series needs d_0 = 1");
  const std::size_t J = d.degree();
  const unsigned bits = d.coeffs[0].bits();
  LogCoefficients out;
  out.values.assign(J + 1, BigFloat(0.0, bits));
  std::vector<BigFloat> mx(J + 1, BigFloat(0.0, bits));  // m * xi_m
  BigFloat scratch(0.0, bits);
  for (std::size_t j = 1; j <= J; ++j) {
    BigFloat acc = d.coeffs[j] * static_cast<long>(j);
    BigFloat sub(0.0, bits);
    for (std::size_t m = 1; m < j; ++m) {
      if (d.coeffs[j - m].is_zero()) continue;
      sub.add_product(mx[m], d.coeffs[j - m], scratch);
    }
    acc -= sub;
    mx[j] = acc;
    out.values[j] = acc / static_cast<long>(j);
  }
  return out;
}

namespace {

// c_0..c_N together with err[n], a bound on |computed c_n - c_n|, when the
// absolute Lambda sums are known.
struct ExpRun {
  PowerSeries series;
  std::vector<long double> err;
};

ExpRun exp_with_bound(const LambdaSequence& lambda, std::size_t N, const std::vector<long double>* abs_lambda,
                      unsigned bits) {
  if (lambda.degree() < N && N > 0) throw Error(ErrorKind::InvalidArgument, "Lambda sequence shorter than N");
  ExpRun run;
  auto& c = run.series.coeffs;
  c.reserve(N + 1);
  c.emplace_back(1.0, bits);
  std::vector<BigFloat> kl;  // k * Lambda_k
  kl.reserve(N + 1);
  kl.emplace_back(0.0, bits);
  std::vector<std::size_t> support;  // k with Lambda_k != 0
  for (std::size_t k = 1; k <= N; ++k) {
    kl.push_back(lambda.values[k] * static_cast<long>(k));
    if (!lambda.values[k].is_zero()) support.push_back(k);
  }

  std::vector<long double> M;
  if (abs_lambda) {
    M.assign(N + 1, 0.0L);
    M[0] = 1.0L;
    run.err.assign(N + 1, 0.0L);
  }
  const long double unit = std::ldexp(1.0L, 1 - static_cast<int>(bits));

  BigFloat acc(0.0, bits), scratch(0.0, bits);
  for (std::size_t n = 1; n <= N; ++n) {
    acc = BigFloat(0.0, bits);
    long double mag = 0.0L;
    for (std::size_t k : support) {
      if (k > n) break;
      acc.add_product(kl[k], c[n - k], scratch);
      if (abs_lambda) mag += static_cast<long double>(k) * (*abs_lambda)[k] * M[n - k];
    }
    c.push_back(acc / static_cast<long>(n));
    if (abs_lambda) {
      M[n] = mag / static_cast<long double>(n);
      const long double nn = static_cast<long double>(n);
      run.err[n] = (nn * nn / 2.0L + 3.0L * nn) * unit * M[n];
    }
  }
  return run;
}

}  // namespace

PowerSeries exp_series(const LambdaSequence& lambda, std::size_t N) {
  const unsigned bits = lambda.values.empty() ? BigFloat::kDefaultBits : lambda.values[0].bits();
  return exp_with_bound(lambda, N, nullptr, bits).series;
}

LambdaSequence lambda_from_model(const WeightedModel& model, std::size_t N, unsigned bits) {
  LambdaSequence out;
  out.values = detail::lambda_sieve<BigFloat>(model, N, bits);
  return out;
}

namespace {

Enumeration enumerate_once(const WeightedModel& model, std::size_t N, const PrecisionContext& ctx, unsigned bits,
                           bool& exhausted) {
  std::vector<long double> abs_lambda;
  LambdaSequence lambda;
  lambda.values = detail::lambda_sieve<BigFloat>(model, N, bits, &abs_lambda);
  auto run = exp_with_bound(lambda, N, &abs_lambda, bits);

  Enumeration out;
  out.bits_used = bits;
  out.min_significant_bits = static_cast<double>(bits);
  const bool integral = model.is_integral();
  exhausted = false;
  for (std::size_t n = 1; n <= N; ++n) {
    const BigFloat& c = run.series.coeffs[n];
    const long double e = run.err[n];
    if (c.sign() < 0 && -c.to_double() > ctx.tol) out.negative.push_back(n);
    if (e == 0.0L) continue;
    // an integer-valued coefficient is certified once the bound is below 1/4
    if (integral && e < 0.25L) continue;
    const double mag = c.log_abs() / std::log(2.0);  // log2 |c_n|
    const double sig = c.is_zero() ? -1e9 : mag - static_cast<double>(std::log2(e));
    out.min_significant_bits = std::min(out.min_significant_bits, sig);
    if (sig < 10.0) exhausted = true;
  }
  out.series = std::move(run.series);
  return out;
}

}  // namespace

Enumeration enumerate_exact(const WeightedModel& model, std::size_t N, const PrecisionContext& ctx) {
  ctx.validate();
  bool exhausted = false;
  auto first = enumerate_once(model, N, ctx, ctx.bits, exhausted);
  if (!exhausted) return first;
  auto second = enumerate_once(model, N, ctx, 2 * ctx.bits, exhausted);
  if (!exhausted) return second;
  throw Error(ErrorKind::PrecisionExhausted,
              "fewer than 10 significant bits at " + std::to_string(2 * ctx.bits) + " bits (min " +
                  std::to_string(second.min_significant_bits) + ")");
}

PowerSeries direct_factor_oracle(const WeightedModel& model, std::size_t N, const PrecisionContext& ctx) {
  ctx.validate();
  const unsigned bits = ctx.bits;
  PowerSeries P;
  P.coeffs.assign(N + 1, BigFloat(0.0, bits));
  P.coeffs[0] = BigFloat(1.0, bits);
  BigFloat scratch(0.0, bits);
  for (std::size_t k = 1; k <= N; ++k) {
    const auto b = detail::sequence_value<BigFloat>(model.weights, k, bits);
    if (b.is_zero()) continue;
    const auto a = detail::sequence_value<BigFloat>(model.frequencies, k, bits);
    const std::size_t J = N / k;

    PowerSeries d;
    for (std::size_t j = 0; j <= J; ++j) d.coeffs.emplace_back(model.inner.d(j), bits);
    const auto xi = log_series(d);

    // factor in w = z^k: exp(sum_i b xi_i a^i w^i)
    std::vector<BigFloat> ig(J + 1, BigFloat(0.0, bits));  // i * g_i
    BigFloat apow = a;
    for (std::size_t i = 1; i <= J; ++i) {
      ig[i] = b * xi.values[i] * apow * static_cast<long>(i);
      apow *= a;
    }
    std::vector<BigFloat> E(J + 1, BigFloat(0.0, bits));
    E[0] = BigFloat(1.0, bits);
    for (std::size_t m = 1; m <= J; ++m) {
      BigFloat acc(0.0, bits);
      for (std::size_t i = 1; i <= m; ++i) acc.add_product(ig[i], E[m - i], scratch);
      E[m] = acc / static_cast<long>(m);
    }

    for (std::size_t n = N + 1; n-- > 0;) {
      BigFloat acc = P.coeffs[n];
      for (std::size_t m = 1; m * k <= n; ++m) acc.add_product(E[m], P.coeffs[n - m * k], scratch);
      P.coeffs[n] = std::move(acc);
    }
  }
  return P;
}

}  // namespace meinardus
