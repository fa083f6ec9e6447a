#pragma once

// log f(e^-delta) by direct summation and by the residue expansion, the Hardy
// form for ordinary partitions, and the final estimate of log c_n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "meinardus/models.hpp"
#include "meinardus/profile.hpp"
#include "meinardus/series.hpp"

namespace meinardus {

struct GenFnEvaluation {
  double delta = 0.0;
  double log_value_direct = 0.0;
  double log_value_residue = 0.0;
  double gap = 0.0;  // direct - residue
  std::size_t L_used = 0;
  std::size_t K_used = 0;
};

enum class EstimateVariant { PureAsymptotic, SemiExact };

std::string to_string(EstimateVariant v);
// "pure" / "semi-exact" (also the enum spellings). Throws InvalidArgument.
EstimateVariant parse_variant(const std::string& s);

struct EstimateComponents {
  double n_delta = 0.0;       // n delta_n
  double log_gen_fn = 0.0;    // log f(delta_n)
  double gaussian = 0.0;      // -1/2 log(2 pi B_n^2)
};

struct EnumerationReport {
  std::uint64_t n = 0;
  std::optional<double> log_cn_exact;
  double log_cn_estimate = 0.0;
  double delta = 0.0;
  EstimateComponents components;
  std::optional<double> ratio;  // estimate / exact
  EstimateVariant variant = EstimateVariant::SemiExact;
  double variance = 0.0;        // B_n^2 used by the Gaussian factor
  std::size_t L_used = 0;
  // |D(-L-1)| delta^{L+1} / (L+1)! when the profile holds that coefficient.
  std::optional<double> delta_tail;
};

// Default Delta truncation.
inline constexpr std::size_t kDefaultDeltaL = 8;

// Largest n for which estimate_cn enumerates c_n exactly.
inline constexpr std::uint64_t kEnumerationCap = 5000;

// sum_{k<=K} Lambda_k e^{-k delta}. Throws TruncationTooShallow when the tail
// bound exceeds tol.
double log_gen_fn_direct(const WeightedModel& model, double delta, std::size_t K, double tol = 1e-12);

// sum_l h_l delta^-rho_l + h0 - A0 log delta + Delta(delta) with L terms of
// Delta. Throws MissingDeltaCoeffs.
double log_gen_fn_residue(const AsymptoticProfile& profile, double delta, std::size_t L);

// Both of the above plus the gap. L is clipped to the profile's length.
GenFnEvaluation evaluate_gen_fn(const WeightedModel& model, double delta, std::size_t L = kDefaultDeltaL,
                                const PrecisionContext& ctx = {});

// zeta(2)/delta + 1/2 log delta - 1/2 log(2 pi) - delta/24.
double hardy_expansion(double delta);
// The neglected exp(-(2 pi)^2 / delta) scale of the Hardy form.
double hardy_residual_bound(double delta);

// Throws MissingProfile for PureAsymptotic without a profile.
// compare_exact: enumerate c_n when n <= kEnumerationCap.
EnumerationReport estimate_cn(const WeightedModel& model, std::uint64_t n, EstimateVariant variant,
                              const PrecisionContext& ctx = {}, bool compare_exact = true);

// log c_n from the exact engine; nullopt when c_n <= 0.
std::optional<double> exact_log_cn(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx = {});

}  // namespace meinardus
