#pragma once

// Formal power series over BigFloat: log/exp recurrences, the Lambda_k
// divisor-sum engine and exact coefficient enumeration.

#include <cstddef>
#include <vector>

#include "meinardus/bigfloat.hpp"
#include "meinardus/models.hpp"

namespace meinardus {

struct PrecisionContext {
  unsigned bits = BigFloat::kDefaultBits;
  double tol = 1e-30;

  // Throws InvalidArgument unless bits >= 64 and 0 < tol < 1.
  void validate() const;
};

// c_0..c_N.
struct PowerSeries {
  std::vector<BigFloat> coeffs;
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// Lambda_1..Lambda_N stored at indices 1..N; index 0 holds zero.
struct LambdaSequence {
  std::vector<BigFloat> values;
  std::size_t degree() const { return values.empty() ? 0 : values.size() - 1; }
};

// xi_1..xi_J at indices 1..J; index 0 holds zero.
struct LogCoefficients {
  std::vector<BigFloat> values;
  std::size_t degree() const { return values.empty() ? 0 : values.size() - 1; }
};

// j xi_j = j d_j - sum_{m<j} m xi_m d_{j-m}. Throws NonUnitConstantTerm.
LogCoefficients log_series(const PowerSeries& d);

// n c_n = sum_{k=1}^{n} k Lambda_k c_{n-k}, c_0 = 1. Throws InvalidArgument
// when lambda.degree() < N.
PowerSeries exp_series(const LambdaSequence& lambda, std::size_t N);

LambdaSequence lambda_from_model(const WeightedModel& model, std::size_t N, unsigned bits = BigFloat::kDefaultBits);

struct Enumeration {
  PowerSeries series;
  std::vector<std::size_t> negative;  // indices n with c_n < -tol
  unsigned bits_used = 0;
  // Smallest certified number of significant bits over the nonzero c_n.
  double min_significant_bits = 0.0;
};

// lambda_from_model followed by exp_series, with a running bound on the
// rounding error of every c_n. Fewer than 10 certified bits in some c_n
// triggers one retry at twice the precision, then PrecisionExhausted.
Enumeration enumerate_exact(const WeightedModel& model, std::size_t N, const PrecisionContext& ctx = {});

// prod_{k<=N} exp(b_k log S(a_k z^k)) with log S from log_series of the d_j
// and one truncated multiplication per factor. Independent of the sieve.
PowerSeries direct_factor_oracle(const WeightedModel& model, std::size_t N, const PrecisionContext& ctx = {});

}  // namespace meinardus
