#pragma once

// Khintchine's equation sum k Lambda_k e^{-k delta} = n and the moments of the
// tilted ensemble. Everything here runs in double precision on Lambda_k
// computed by the same divisor sieve as the exact engine.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "meinardus/models.hpp"
#include "meinardus/series.hpp"

namespace meinardus {

enum class SaddleMethod { Bisection, NewtonPolished };

struct SaddleSolution {
  std::uint64_t n = 0;
  double delta = 0.0;
  double residual = 0.0;  // sum k Lambda_k e^{-k delta} - n
  int iterations = 0;
  std::size_t K = 0;
  SaddleMethod method = SaddleMethod::Bisection;
};

struct TiltedMoments {
  double mean = 0.0;
  double variance = 0.0;
  double third = 0.0;
  double delta = 0.0;
  std::size_t K = 0;
};

// Lambda_1..Lambda_K in double; index 0 holds zero.
std::vector<double> lambda_double(const WeightedModel& model, std::size_t K);

// ceil(2/delta * log(1/tol)).
std::size_t truncation_depth(double delta, double tol);

// sum_{k<=K} k^m Lambda_k e^{-k delta}.
double lambda_moment(const std::vector<double>& lambda, double delta, std::size_t K, int m);

// Bound on sum_{k>K} k^m |Lambda_k| e^{-k delta} assuming |Lambda_k| <= C k^g
// with C fitted on k <= K. Infinite when the terms are not yet decreasing.
double lambda_tail_bound(const std::vector<double>& lambda, double delta, std::size_t K, int m, double g);

// sum_{k<=K} k Lambda_k e^{-k delta}. Throws TruncationTooShallow when the
// tail bound (growth exponent g) exceeds tail_tol, or when lambda has fewer
// than K entries.
double khintchine_lhs(const std::vector<double>& lambda, double delta, std::size_t K,
                      double tail_tol = std::numeric_limits<double>::infinity(), double g = 2.0);

// (rho_r h_r)^{1/(rho_r+1)} n^{-1/(rho_r+1)}.
double asymptotic_delta(const AsymptoticProfile& profile, double n);

// Bracketing bisection followed by Newton with the analytic derivative.
// |residual| <= 1e-9 n on return. Throws NoPositiveMass when Lambda vanishes.
SaddleSolution solve_khintchine(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx = {});

// Derivatives of log f along the Lambda path: mean, variance, third cumulant.
TiltedMoments tilted_moments(const WeightedModel& model, double delta, std::size_t K);

// The same moments from the per-factor distributions
// P(Y_k = jk) = d_k(j) e^{-delta k j} / S_k(e^{-delta}), j <= K/k.
TiltedMoments tilted_moments_factorwise(const WeightedModel& model, double delta, std::size_t K);

}  // namespace meinardus
