#pragma once

// Multiplicative models f(z) = prod_k S(a_k z^k)^{b_k}: the inner series S,
// the weight sequence b_k, the frequency sequence a_k, and an optional
// analytic profile.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "meinardus/profile.hpp"

namespace meinardus {

enum class SingularityKind { Pole, Zero };

struct SingularityDescriptor {
  std::complex<double> location;
  int order = 1;
  SingularityKind kind = SingularityKind::Pole;
  // |L(z0)| in S(z) ~ L(z) / (z - z0) for poles; 1 for zeros.
  double regular_part_modulus = 1.0;

  bool operator==(const SingularityDescriptor&) const = default;
};

struct GeometricPole {  // S = 1/(1-z)
  bool operator==(const GeometricPole&) const = default;
};
struct DistinctBinomial {  // S = 1+z
  bool operator==(const DistinctBinomial&) const = default;
};
struct RatioKernel {  // S = (1+z)/(1-z^p)
  int p = 1;
  bool operator==(const RatioKernel&) const = default;
};

enum class TailRule { Zero, Periodic };

// Finite coefficients d_0..d_J plus a rule for j > J. A periodic tail repeats
// the last `period` listed coefficients forever.
struct ExplicitSeries {
  std::vector<double> coeffs;
  TailRule tail = TailRule::Zero;
  int period = 0;
  bool operator==(const ExplicitSeries&) const = default;
};

class InnerSeriesSpec {
 public:
  using Kind = std::variant<GeometricPole, DistinctBinomial, RatioKernel, ExplicitSeries>;

  static InnerSeriesSpec geometric_pole();
  static InnerSeriesSpec distinct_binomial();
  static InnerSeriesSpec ratio_kernel(int p);
  // Throws ValidationError on d_0 != 1, negative coefficients, no positive
  // coefficient beyond d_0, or a coefficient growth rate above 1 + tol.
  static InnerSeriesSpec explicit_series(std::vector<double> coeffs, TailRule tail, int period = 0,
                                         std::vector<SingularityDescriptor> singularities = {},
                                         double tol = 1e-12);

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;

  double d(std::size_t j) const;
  std::size_t l0() const { return l0_; }
  const std::vector<SingularityDescriptor>& singularities() const { return singularities_; }

  // S = numerator(z) / (1 - z^T) with T = denominator_period() (0: no
  // denominator). numerator()[0] == 1.
  const std::vector<double>& numerator() const { return numerator_; }
  int denominator_period() const { return denominator_period_; }

  // Index past which the support pattern of d_j repeats (or stops), so a gcd
  // over j < certified_extent() is the gcd over the whole support.
  std::size_t certified_extent() const;

  bool has_integer_coefficients() const;

  bool operator==(const InnerSeriesSpec& o) const {
    return kind_ == o.kind_ && singularities_ == o.singularities_;
  }

 private:
  InnerSeriesSpec(Kind kind, std::vector<SingularityDescriptor> sing, std::vector<double> numerator, int period);

  Kind kind_;
  std::vector<SingularityDescriptor> singularities_;
  std::vector<double> numerator_;
  int denominator_period_ = 0;
  std::size_t l0_ = 1;
};

struct ConstantSeq {
  double value = 1.0;
  bool operator==(const ConstantSeq&) const = default;
};
struct PowerLawSeq {  // c k^beta
  double c = 1.0;
  double beta = 0.0;
  bool operator==(const PowerLawSeq&) const = default;
};
struct VonMangoldtSeq {
  bool operator==(const VonMangoldtSeq&) const = default;
};
// 1/(k log^eps k) for k >= 2, plus 1 when 4 | k; zero at k = 1.
struct Example3Seq {
  double eps = 0.5;
  bool operator==(const Example3Seq&) const = default;
};
struct IndicatorModulusSeq {  // 1 if m | k else 0
  int m = 1;
  bool operator==(const IndicatorModulusSeq&) const = default;
};
// values[k-1] for k <= size, `fill` afterwards.
struct TableSeq {
  std::vector<double> values;
  double fill = 0.0;
  bool operator==(const TableSeq&) const = default;
};

struct SequenceSpec {
  using Kind = std::variant<ConstantSeq, PowerLawSeq, VonMangoldtSeq, Example3Seq, IndicatorModulusSeq, TableSeq>;
  Kind kind;

  double at(std::uint64_t k) const;
  std::string kind_name() const;
  bool is_integer_valued() const;
  bool is_identically_one() const;

  bool operator==(const SequenceSpec&) const = default;
};

inline SequenceSpec constant_seq(double v) { return {ConstantSeq{v}}; }

struct WeightedModel {
  std::string name;
  InnerSeriesSpec inner = InnerSeriesSpec::geometric_pole();
  SequenceSpec weights = constant_seq(1.0);
  SequenceSpec frequencies = constant_seq(1.0);
  std::optional<AsymptoticProfile> profile;

  // Checks weights >= 0 and frequencies in (0, 1] on k <= check_upto, plus
  // the profile invariants. Throws ValidationError.
  void validate(std::uint64_t check_upto = 4096) const;

  // Integer weights, unit frequencies and integer inner coefficients: every
  // c_n is then an integer.
  bool is_integral() const;

  // rho_r from the profile, or 1 when no profile is attached.
  double growth_exponent() const { return profile && !profile->poles.empty() ? profile->rho_r() : 1.0; }

  bool operator==(const WeightedModel&) const = default;
};

// log p when k = p^r, else 0. Trial division.
double von_mangoldt(std::uint64_t k);

// Prime p with k = p^r, or 0 when k is not a prime power.
std::uint64_t prime_power_base(std::uint64_t k);

// Built-in catalogue: partitions, distinct, prime-powers, example3(eps),
// ratio-kernel(p), q4-indicator, gcd2, empty-weights. Throws UnknownModel.
WeightedModel builtin(const std::string& name);
std::vector<std::string> builtin_names();

// JSON model files. Throws ParseError / ValidationError.
WeightedModel parse_model(const std::string& json_text);
WeightedModel load_model(const std::filesystem::path& path);
std::string save_model(const WeightedModel& model);

// Builtin name or path to a model file.
WeightedModel resolve_model(const std::string& source);

}  // namespace meinardus
