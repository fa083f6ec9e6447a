#include "meinardus/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "meinardus/detail/kernels.hpp"
#include "meinardus/error.hpp"

namespace meinardus {

using boost::multiprecision::cpp_rational;

namespace {

constexpr std::size_t kBernoulliMax = 64;
constexpr double kPi = std::numbers::pi;

std::vector<cpp_rational> build_bernoulli() {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  std::vector<cpp_rational> B(kBernoulliMax + 1);
  B[0] = 1;
  for (std::size_t m = 1; m <= kBernoulliMax; ++m) {
    cpp_rational acc = 0;
    boost::multiprecision::cpp_int binom = 1;  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      acc += cpp_rational(binom) * B[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[m] = -acc / (m + 1);
  }
  return B;
}

const std::vector<cpp_rational>& bernoulli_table() {
  static const std::vector<cpp_rational> table = build_bernoulli();
  return table;
}

// Eager initialisation so the cache is never built concurrently.
[[maybe_unused]] const bool bernoulli_ready = (bernoulli_table(), true);

bool is_nonpositive_integer(double s) { return s <= 0.0 && s == std::floor(s); }

}  // namespace

const cpp_rational& bernoulli_rational(std::size_t m) {
  if (m > kBernoulliMax) throw Error(ErrorKind::OutOfRange, "Bernoulli index above 64");
  return bernoulli_table()[m];
}

double bernoulli(std::size_t m) { return static_cast<double>(bernoulli_rational(m)); }

double zeta_euler_maclaurin(double s) {
  if (s == 1.0) throw Error(ErrorKind::PoleAtOne, "zeta(s) at s = 1");
  using R = long double;
  const R x = s;
  const int N = 10;
  R sum = 0;
  for (int k = N - 1; k >= 1; --k) sum += std::pow(static_cast<R>(k), -x);
  const R n = N;
  sum += std::pow(n, 1 - x) / (x - 1) + std::pow(n, -x) / 2;
  // B_2j / (2j)! * s (s+1) ... (s+2j-2) * N^(-s-2j+1)
  R rising = x;          // s (s+1) ... (s+2j-2)
  R fact = 2;            // (2j)!
  R npow = std::pow(n, -x - 1);
  for (std::size_t j = 1; 2 * j <= kBernoulliMax; ++j) {
    const R term = static_cast<R>(bernoulli(2 * j)) / fact * rising * npow;
    sum += term;
    if (rising == 0 || std::fabs(term) < 1e-24L * std::fabs(sum)) break;
    rising *= (x + 2 * j - 1) * (x + 2 * j);
    fact *= static_cast<R>(2 * j + 1) * static_cast<R>(2 * j + 2);
    npow /= n * n;
  }
  return static_cast<double>(sum);
}

double zeta_functional_equation(double s) {
  if (s == 1.0) throw Error(ErrorKind::PoleAtOne, "zeta(s) at s = 1");
  if (s >= 0.5) return zeta_euler_maclaurin(s);
  // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * std::tgamma(1.0 - s) *
         zeta_euler_maclaurin(1.0 - s);
}

double zeta_real(double s) {
  if (s == 1.0) throw Error(ErrorKind::PoleAtOne, "zeta(s) at s = 1");
  if (is_nonpositive_integer(s)) {
    const auto l = static_cast<std::size_t>(-s);
    if (l + 1 <= kBernoulliMax) {
      if (l == 0) return -0.5;
      return static_cast<double>(-bernoulli_rational(l + 1) / cpp_rational(l + 1));
    }
  }
  if (s >= 0.0) return zeta_euler_maclaurin(s);
  return zeta_functional_equation(s);
}

double zeta_prime_zero() { return -0.5 * std::log(2.0 * kPi); }

namespace {

// Partial sum at K and K/2; the difference, scaled by a geometric factor for a
// tail decaying like K^-gamma, is the error estimate.
template <class Partial>
DirichletValue with_tail_estimate(double s, std::size_t K, double gamma, Partial partial) {
  const double full = partial(K);
  const double half = partial(std::max<std::size_t>(1, K / 2));
  const double factor = gamma > 0.0 ? 1.0 / (std::pow(2.0, gamma) - 1.0) : 1.0;
  DirichletValue v;
  v.s = {s, 0.0};
  v.value = {full, 0.0};
  v.abs_error = 2.0 * std::fabs(full - half) * factor + 1e-15 * std::fabs(full);
  return v;
}

double constant_frequency(const WeightedModel& model) {
  const auto* c = std::get_if<ConstantSeq>(&model.frequencies.kind);
  if (c) return c->value;
  if (const auto* p = std::get_if<PowerLawSeq>(&model.frequencies.kind); p && p->beta == 0.0) return p->c;
  throw Error(ErrorKind::UnsupportedForm, "D_(xi,a) needs a constant frequency sequence");
}

}  // namespace

DirichletValue eval_D_direct(const WeightedModel& model, double s, std::size_t K) {
  const double rho = model.growth_exponent();
  if (!(s > rho)) throw Error(ErrorKind::NotConvergent, "D(s) needs s > rho_r = " + std::to_string(rho));
  if (K < 1) throw Error(ErrorKind::InvalidArgument, "K must be >= 1");
  const auto b = detail::sequence_values<double>(model.weights, K, 53);
  const auto a = detail::sequence_values<double>(model.frequencies, K, 53);
  const auto xi = detail::log_coefficients<double>(model.inner, K, 53);
  return with_tail_estimate(s, K, s - rho, [&](std::size_t M) {
    double total = 0.0;
    for (std::size_t k = 1; k <= M; ++k) {
      if (b[k] == 0.0) continue;
      const double ks = std::pow(static_cast<double>(k), -s);
      double inner = 0.0, apow = 1.0;
      for (std::size_t j = 1; j <= M; ++j) {
        apow *= a[k];
        inner += xi[j] * apow * std::pow(static_cast<double>(j), -s);
      }
      total += b[k] * ks * inner;
    }
    return total;
  });
}

DirichletValue eval_Db_direct(const WeightedModel& model, double s, std::size_t K) {
  const double rho = model.growth_exponent();
  if (!(s > rho)) throw Error(ErrorKind::NotConvergent, "D_b(s) needs s > rho_r");
  const auto b = detail::sequence_values<double>(model.weights, K, 53);
  return with_tail_estimate(s, K, s - rho, [&](std::size_t M) {
    double total = 0.0;
    for (std::size_t k = M; k >= 1; --k) total += b[k] * std::pow(static_cast<double>(k), -s);
    return total;
  });
}

DirichletValue eval_Dxi_direct(const WeightedModel& model, double s, std::size_t K) {
  if (!(s > 0.0)) throw Error(ErrorKind::NotConvergent, "D_(xi,a)(s) needs s > 0");
  const double a = constant_frequency(model);
  const auto xi = detail::log_coefficients<double>(model.inner, K, 53);
  return with_tail_estimate(s, K, s, [&](std::size_t M) {
    double total = 0.0;
    for (std::size_t j = M; j >= 1; --j)
      total += xi[j] * std::pow(a, static_cast<double>(j)) * std::pow(static_cast<double>(j), -s);
    return total;
  });
}

std::complex<double> delta_remainder(const AsymptoticProfile& profile, std::complex<double> tau, std::size_t L) {
  if (L > profile.L())
    throw Error(ErrorKind::MissingDeltaCoeffs,
                "need D(-l) for l <= " + std::to_string(L) + ", profile has " + std::to_string(profile.L()));
  std::complex<double> total = 0.0, power = 1.0;
  double fact = 1.0;
  for (std::size_t l = 1; l <= L; ++l) {
    power *= tau;
    fact *= static_cast<double>(l);
    const double sign = l % 2 ? -1.0 : 1.0;
    total += sign * profile.delta_coeffs[l - 1] * power / fact;
  }
  return total;
}

namespace {

constexpr std::size_t kProfileL = 8;

std::vector<double> zeta_pair_coeffs(double (*extra)(int l, double arg), double arg) {
  // D(-l) = zeta(-l) zeta(1-l) * extra(l)
  std::vector<double> out;
  for (std::size_t l = 1; l <= kProfileL; ++l) {
    const double x = -static_cast<double>(l);
    out.push_back(zeta_real(x) * zeta_real(1.0 + x) * extra(static_cast<int>(l), arg));
  }
  return out;
}

}  // namespace

AsymptoticProfile profile_partitions() {
  AsymptoticProfile p;
  p.poles = {{1.0, zeta_real(2.0)}};
  p.A0 = zeta_real(0.0);
  p.h0 = zeta_prime_zero();
  p.delta_coeffs = zeta_pair_coeffs([](int, double) { return 1.0; }, 0.0);
  return p;
}

AsymptoticProfile profile_distinct() {
  // D(s) = zeta(s) (1 - 2^-s) zeta(s+1); regular at 0 with D(0) = -log(2)/2.
  AsymptoticProfile p;
  p.poles = {{1.0, zeta_real(2.0) / 2.0}};
  p.A0 = 0.0;
  p.h0 = -0.5 * std::log(2.0);
  p.delta_coeffs = zeta_pair_coeffs([](int l, double) { return 1.0 - std::pow(2.0, l); }, 0.0);
  return p;
}

AsymptoticProfile profile_ratio_kernel(int p_) {
  const double p = p_;
  AsymptoticProfile prof;
  prof.poles = {{1.0, zeta_real(2.0) * (0.5 + 1.0 / p)}};
  prof.A0 = zeta_real(0.0);
  prof.h0 = zeta_prime_zero() + zeta_real(0.0) * (std::log(2.0) - std::log(p));
  prof.delta_coeffs =
      zeta_pair_coeffs([](int l, double q) { return 1.0 - std::pow(2.0, l) + std::pow(q, l); }, p);
  return prof;
}

AsymptoticProfile profile_indicator_partitions(int m_) {
  const double m = m_;
  AsymptoticProfile p;
  p.poles = {{1.0, zeta_real(2.0) / m}};
  p.A0 = zeta_real(0.0);
  p.h0 = zeta_prime_zero() - zeta_real(0.0) * std::log(m);
  p.delta_coeffs = zeta_pair_coeffs([](int l, double q) { return std::pow(q, l); }, m);
  return p;
}

AsymptoticProfile profile_prime_powers_main_term() {
  AsymptoticProfile p;
  p.poles = {{1.0, zeta_real(2.0)}};
  return p;
}

DirichletValue euler_maclaurin_Db(const SequenceSpec& weights, double s, std::size_t terms) {
  const auto* e3 = std::get_if<Example3Seq>(&weights.kind);
  if (!e3) throw Error(ErrorKind::UnsupportedForm, "Euler-Maclaurin form needs k^-s-1 log^-eps k weights");
  if (!(s > 0.0)) throw Error(ErrorKind::UnsupportedForm, "Euler-Maclaurin form implemented for s > 0 only");
  if (terms < 1) throw Error(ErrorKind::InvalidArgument, "terms must be >= 1");
  const double eps = e3->eps;
  const double log2 = std::log(2.0);

  // f(x) = x^(-s-1) log^-eps x
  const auto f = [&](double x) { return std::pow(x, -s - 1.0) * std::pow(std::log(x), -eps); };
  const auto fprime = [&](double x) {
    const double lx = std::log(x);
    return -std::pow(x, -s - 2.0) * std::pow(lx, -eps) * (s + 1.0 + eps / lx);
  };

  // int_2^inf x^(-s-1) log^-eps x dx = s^(eps-1) Gamma(1-eps, s log 2)
  const double integral = std::pow(s, eps - 1.0) * boost::math::tgamma(1.0 - eps, s * log2);
  const double boundary = f(2.0) / 2.0;

  using Gauss = boost::math::quadrature::gauss<double, 20>;
  double remainder = 0.0;
  for (std::size_t k = 2; k < terms + 2; ++k) {
    const double lo = static_cast<double>(k);
    remainder += Gauss::integrate([&](double x) { return fprime(x) * (x - lo - 0.5); }, lo, lo + 1.0);
  }
  const double X = static_cast<double>(terms + 2);

  DirichletValue v;
  v.s = {s, 0.0};
  v.value = {integral + boundary + remainder, 0.0};
  v.abs_error = std::fabs(fprime(X)) / 12.0 + 1e-15 * std::fabs(v.value.real());
  return v;
}

}  // namespace meinardus
