#pragma once

// Precision-generic building blocks shared by the exact (BigFloat) and the
// analytic (double) code paths: log-coefficients of the inner series, bulk
// sequence evaluation and the divisor sieve for Lambda_k.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "meinardus/bigfloat.hpp"
#include "meinardus/models.hpp"

namespace meinardus::detail {

template <class T>
struct Scalar;

template <>
struct Scalar<double> {
  static double make(double v, unsigned) { return v; }
  static double ratio(long p, long q, unsigned) { return static_cast<double>(p) / static_cast<double>(q); }
  static double log_of(std::uint64_t k, unsigned) { return std::log(static_cast<double>(k)); }
};

template <>
struct Scalar<BigFloat> {
  static BigFloat make(double v, unsigned bits) { return BigFloat(v, bits); }
  static BigFloat ratio(long p, long q, unsigned bits) { return BigFloat::ratio(p, q, bits); }
  static BigFloat log_of(std::uint64_t k, unsigned bits) { return log(BigFloat::from_uint(k, bits)); }
};

// Smallest-prime-factor table on [0, n].
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t n);

// xi_1..xi_J of log S(z) = sum xi_j z^j; entry 0 is zero.
template <class T>
std::vector<T> log_coefficients(const InnerSeriesSpec& inner, std::size_t J, unsigned bits) {
  using S = Scalar<T>;
  std::vector<T> xi(J + 1, S::make(0.0, bits));
  const auto& kind = inner.kind();
  if (std::holds_alternative<GeometricPole>(kind)) {
    for (std::size_t j = 1; j <= J; ++j) xi[j] = S::ratio(1, static_cast<long>(j), bits);
    return xi;
  }
  if (std::holds_alternative<DistinctBinomial>(kind)) {
    for (std::size_t j = 1; j <= J; ++j) xi[j] = S::ratio(j % 2 ? 1 : -1, static_cast<long>(j), bits);
    return xi;
  }
  if (const auto* rk = std::get_if<RatioKernel>(&kind)) {
    const auto p = static_cast<std::size_t>(rk->p);
    for (std::size_t j = 1; j <= J; ++j) {
      const long num = (j % 2 ? 1 : -1) + (j % p == 0 ? static_cast<long>(p) : 0);
      xi[j] = S::ratio(num, static_cast<long>(j), bits);
    }
    return xi;
  }

  // Explicit series: log of the numerator polynomial by the recurrence
  //   j x_j = j N_j - sum_{m=j-D}^{j-1} m x_m N_{j-m},
  // then -log(1 - z^T) adds T/j at multiples of T.
  const auto& num = inner.numerator();
  const std::size_t deg = num.size() - 1;
  std::vector<T> n_coef;
  n_coef.reserve(num.size());
  for (double v : num) n_coef.push_back(S::make(v, bits));
  std::vector<T> jx(J + 1, S::make(0.0, bits));  // j * x_j
  for (std::size_t j = 1; j <= J; ++j) {
    T acc = j <= deg ? n_coef[j] * S::make(static_cast<double>(j), bits) : S::make(0.0, bits);
    const std::size_t m_lo = j > deg ? j - deg : 1;
    for (std::size_t m = m_lo; m < j; ++m) acc -= jx[m] * n_coef[j - m];
    jx[j] = acc;
    xi[j] = acc / S::make(static_cast<double>(j), bits);
  }
  if (const int T_ = inner.denominator_period(); T_ > 0) {
    const auto per = static_cast<std::size_t>(T_);
    for (std::size_t j = per; j <= J; j += per) xi[j] += S::ratio(T_, static_cast<long>(j), bits);
  }
  return xi;
}

template <class T>
T sequence_value(const SequenceSpec& seq, std::uint64_t k, unsigned bits) {
  using S = Scalar<T>;
  using std::pow;
  return std::visit(
      [&](const auto& s) -> T {
        using K = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<K, ConstantSeq>) {
          return S::make(s.value, bits);
        } else if constexpr (std::is_same_v<K, PowerLawSeq>) {
          if (s.beta == 0.0) return S::make(s.c, bits);
          return S::make(s.c, bits) * pow(S::make(static_cast<double>(k), bits), S::make(s.beta, bits));
        } else if constexpr (std::is_same_v<K, VonMangoldtSeq>) {
          const auto p = prime_power_base(k);
          return p ? S::log_of(p, bits) : S::make(0.0, bits);
        } else if constexpr (std::is_same_v<K, Example3Seq>) {
          if (k < 2) return S::make(0.0, bits);
          T v = S::make(1.0, bits) /
                (S::make(static_cast<double>(k), bits) * pow(S::log_of(k, bits), S::make(s.eps, bits)));
          if (k % 4 == 0) v += S::make(1.0, bits);
          return v;
        } else if constexpr (std::is_same_v<K, IndicatorModulusSeq>) {
          return S::make(k % static_cast<std::uint64_t>(s.m) == 0 ? 1.0 : 0.0, bits);
        } else {
          return S::make(k <= s.values.size() ? s.values[k - 1] : s.fill, bits);
        }
      },
      seq.kind);
}

// Values for k = 0..K (entry 0 is zero). Von Mangoldt weights use a sieve.
template <class T>
std::vector<T> sequence_values(const SequenceSpec& seq, std::uint64_t K, unsigned bits) {
  using S = Scalar<T>;
  std::vector<T> out;
  out.reserve(K + 1);
  out.push_back(S::make(0.0, bits));
  if (std::holds_alternative<VonMangoldtSeq>(seq.kind)) {
    const auto spf = smallest_prime_factors(K);
    std::vector<T> log_p(K + 1, S::make(0.0, bits));
    for (std::uint64_t k = 1; k <= K; ++k) {
      if (k == 1) {
        out.push_back(S::make(0.0, bits));
        continue;
      }
      const std::uint64_t p = spf[k];
      if (p == k) log_p[k] = S::log_of(k, bits);
      std::uint64_t m = k;
      while (m % p == 0) m /= p;
      out.push_back(m == 1 ? log_p[p] : S::make(0.0, bits));
    }
    return out;
  }
  for (std::uint64_t k = 1; k <= K; ++k) out.push_back(sequence_value<T>(seq, k, bits));
  return out;
}

// Lambda_m = sum_{j | m} b_j a_j^{m/j} xi_{m/j} for m = 1..N by visiting the
// multiples of every j. When abs_out is given it receives the same sum taken
// over absolute values, which bounds rounding propagation.
template <class T>
std::vector<T> lambda_sieve(const WeightedModel& model, std::size_t N, unsigned bits,
                            std::vector<long double>* abs_out = nullptr) {
  using S = Scalar<T>;
  std::vector<T> lambda(N + 1, S::make(0.0, bits));
  if (abs_out) abs_out->assign(N + 1, 0.0L);
  if (N == 0) return lambda;
  const auto xi = log_coefficients<T>(model.inner, N, bits);
  const auto b = sequence_values<T>(model.weights, N, bits);
  const auto a = sequence_values<T>(model.frequencies, N, bits);
  const T one = S::make(1.0, bits);
  T term = S::make(0.0, bits);
  for (std::size_t j = 1; j <= N; ++j) {
    if (b[j] == S::make(0.0, bits)) continue;
    const bool unit_freq = a[j] == one;
    T apow = a[j];
    for (std::size_t m = 1, idx = j; idx <= N; ++m, idx += j) {
      term = b[j] * xi[m];
      if (!unit_freq) {
        term *= apow;
        apow *= a[j];
      }
      lambda[idx] += term;
      if (abs_out) {
        if constexpr (std::is_same_v<T, double>) {
          (*abs_out)[idx] += std::fabs(static_cast<long double>(term));
        } else {
          (*abs_out)[idx] += std::fabs(term.to_long_double());
        }
      }
    }
  }
  return lambda;
}

}  // namespace meinardus::detail
