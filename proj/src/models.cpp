#include "meinardus/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "meinardus/detail/kernels.hpp"
#include "meinardus/dirichlet.hpp"
#include "meinardus/error.hpp"

namespace meinardus {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double v) { return std::isfinite(v) && v == std::round(v); }

std::vector<SingularityDescriptor> unit_root_poles(int p) {
  std::vector<SingularityDescriptor> out;
  for (int m = 0; m < p; ++m) {
    const auto w = std::polar(1.0, 2.0 * kPi * m / p);
    // S = (1+z)/(1-z^p) ~ L/(z-w) with |L| = |1+w| / p; the pole at w = -1 is
    // removable for even p and keeps the nominal scale 1/p.
    double modulus = std::abs(1.0 + w) / p;
    if (modulus < 1e-12) modulus = 1.0 / p;
    out.push_back({m == 0 ? std::complex<double>(1.0, 0.0) : w, 1, SingularityKind::Pole, modulus});
  }
  return out;
}

void validate_descriptors(const std::vector<SingularityDescriptor>& sing) {
  for (const auto& d : sing) {
    if (std::abs(std::abs(d.location) - 1.0) > 1e-9)
      throw Error(ErrorKind::ValidationError, "singularity location must lie on the unit circle");
    if (d.order < 1) throw Error(ErrorKind::ValidationError, "singularity order must be positive");
    if (d.kind == SingularityKind::Pole && d.order != 1)
      throw Error(ErrorKind::ValidationError, "pole order must be normalized to 1 (fold it into the weights)");
    if (!(d.regular_part_modulus > 0.0)) throw Error(ErrorKind::ValidationError, "regular part modulus must be positive");
  }
}

}  // namespace

InnerSeriesSpec::InnerSeriesSpec(Kind kind, std::vector<SingularityDescriptor> sing, std::vector<double> numerator,
                                 int period)
    : kind_(std::move(kind)),
      singularities_(std::move(sing)),
      numerator_(std::move(numerator)),
      denominator_period_(period) {}

InnerSeriesSpec InnerSeriesSpec::geometric_pole() {
  return InnerSeriesSpec(GeometricPole{}, {{{1.0, 0.0}, 1, SingularityKind::Pole, 1.0}}, {1.0}, 1);
}

InnerSeriesSpec InnerSeriesSpec::distinct_binomial() {
  return InnerSeriesSpec(DistinctBinomial{}, {{{-1.0, 0.0}, 1, SingularityKind::Zero, 1.0}}, {1.0, 1.0}, 0);
}

InnerSeriesSpec InnerSeriesSpec::ratio_kernel(int p) {
  if (p < 1) throw Error(ErrorKind::ValidationError, "ratio kernel needs an integer p >= 1");
  auto sing = unit_root_poles(p);
  sing.push_back({{-1.0, 0.0}, 1, SingularityKind::Zero, 1.0});
  return InnerSeriesSpec(RatioKernel{p}, std::move(sing), {1.0, 1.0}, p);
}

InnerSeriesSpec InnerSeriesSpec::explicit_series(std::vector<double> coeffs, TailRule tail, int period,
                                                 std::vector<SingularityDescriptor> singularities, double tol) {
  if (coeffs.empty() || coeffs[0] != 1.0)
    throw Error(ErrorKind::ValidationError, "explicit inner series needs d_0 = 1");
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!std::isfinite(coeffs[j]) || coeffs[j] < 0.0)
      throw Error(ErrorKind::ValidationError, "inner coefficient d_" + std::to_string(j) + " is negative or not finite");
    if (j >= 1 && coeffs[j] > 0.0 && std::pow(coeffs[j], 1.0 / static_cast<double>(j)) > 1.0 + tol)
      throw Error(ErrorKind::ValidationError,
                  "d_" + std::to_string(j) + " grows faster than radius of convergence 1 allows");
  }
  const std::size_t J = coeffs.size() - 1;
  std::vector<double> numerator;
  int den = 0;
  if (tail == TailRule::Periodic) {
    if (period < 1 || static_cast<std::size_t>(period) > coeffs.size())
      throw Error(ErrorKind::ValidationError, "periodic tail needs 1 <= period <= number of coefficients");
    // S = A(z) + B(z)/(1 - z^T) with B holding the repeating block.
    const std::size_t start = J + 1 - static_cast<std::size_t>(period);
    numerator.assign(J + 1 + static_cast<std::size_t>(period), 0.0);
    for (std::size_t j = 0; j < start; ++j) {
      numerator[j] += coeffs[j];
      numerator[j + static_cast<std::size_t>(period)] -= coeffs[j];
    }
    for (std::size_t j = start; j <= J; ++j) numerator[j] += coeffs[j];
    while (numerator.size() > 1 && numerator.back() == 0.0) numerator.pop_back();
    den = period;
  } else {
    if (period != 0) throw Error(ErrorKind::ValidationError, "zero tail takes no period");
    numerator = coeffs;
    while (numerator.size() > 1 && numerator.back() == 0.0) numerator.pop_back();
  }
  validate_descriptors(singularities);
  InnerSeriesSpec spec(ExplicitSeries{std::move(coeffs), tail, period}, std::move(singularities), std::move(numerator),
                       den);
  std::size_t l0 = 0;
  for (std::size_t j = 1; j < spec.certified_extent(); ++j) {
    if (spec.d(j) > 0.0) {
      l0 = j;
      break;
    }
  }
  if (l0 == 0) throw Error(ErrorKind::ValidationError, "inner series is identically 1 (no d_j > 0 with j >= 1)");
  spec.l0_ = l0;
  return spec;
}

std::string InnerSeriesSpec::kind_name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, GeometricPole>) return "geometric-pole";
        else if constexpr (std::is_same_v<K, DistinctBinomial>) return "distinct-binomial";
        else if constexpr (std::is_same_v<K, RatioKernel>) return "ratio-kernel";
        else return "explicit";
      },
      kind_);
}

double InnerSeriesSpec::d(std::size_t j) const {
  return std::visit(
      [j](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, GeometricPole>) {
          return 1.0;
        } else if constexpr (std::is_same_v<K, DistinctBinomial>) {
          return j <= 1 ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<K, RatioKernel>) {
          const auto p = static_cast<std::size_t>(k.p);
          return (j % p == 0 ? 1.0 : 0.0) + (j >= 1 && (j - 1) % p == 0 ? 1.0 : 0.0);
        } else {
          const std::size_t J = k.coeffs.size() - 1;
          if (j <= J) return k.coeffs[j];
          if (k.tail == TailRule::Zero) return 0.0;
          const auto T = static_cast<std::size_t>(k.period);
          const std::size_t start = J + 1 - T;
          return k.coeffs[start + (j - start) % T];
        }
      },
      kind_);
}

std::size_t InnerSeriesSpec::certified_extent() const {
  return std::visit(
      [](const auto& k) -> std::size_t {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, GeometricPole>) return 2;
        else if constexpr (std::is_same_v<K, DistinctBinomial>) return 2;
        else if constexpr (std::is_same_v<K, RatioKernel>) return static_cast<std::size_t>(k.p) + 2;
        else return k.coeffs.size() + static_cast<std::size_t>(k.period);
      },
      kind_);
}

bool InnerSeriesSpec::has_integer_coefficients() const {
  if (const auto* e = std::get_if<ExplicitSeries>(&kind_))
    return std::all_of(e->coeffs.begin(), e->coeffs.end(), is_integer);
  return true;
}

double SequenceSpec::at(std::uint64_t k) const { return detail::sequence_value<double>(*this, k, 53); }

std::string SequenceSpec::kind_name() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using K = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<K, ConstantSeq>) return "constant";
        else if constexpr (std::is_same_v<K, PowerLawSeq>) return "power-law";
        else if constexpr (std::is_same_v<K, VonMangoldtSeq>) return "von-mangoldt";
        else if constexpr (std::is_same_v<K, Example3Seq>) return "example3";
        else if constexpr (std::is_same_v<K, IndicatorModulusSeq>) return "indicator-modulus";
        else return "table";
      },
      kind);
}

bool SequenceSpec::is_integer_valued() const {
  return std::visit(
      [](const auto& s) -> bool {
        using K = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<K, ConstantSeq>) return is_integer(s.value);
        else if constexpr (std::is_same_v<K, PowerLawSeq>) return s.beta == 0.0 && is_integer(s.c);
        else if constexpr (std::is_same_v<K, IndicatorModulusSeq>) return true;
        else if constexpr (std::is_same_v<K, TableSeq>)
          return is_integer(s.fill) && std::all_of(s.values.begin(), s.values.end(), is_integer);
        else return false;
      },
      kind);
}

bool SequenceSpec::is_identically_one() const {
  if (const auto* c = std::get_if<ConstantSeq>(&kind)) return c->value == 1.0;
  if (const auto* p = std::get_if<PowerLawSeq>(&kind)) return p->c == 1.0 && p->beta == 0.0;
  if (const auto* m = std::get_if<IndicatorModulusSeq>(&kind)) return m->m == 1;
  if (const auto* t = std::get_if<TableSeq>(&kind))
    return t->fill == 1.0 && std::all_of(t->values.begin(), t->values.end(), [](double v) { return v == 1.0; });
  return false;
}

void WeightedModel::validate(std::uint64_t check_upto) const {
  if (const auto* e = std::get_if<Example3Seq>(&weights.kind); e && !(e->eps > 0.0 && e->eps < 1.0))
    throw Error(ErrorKind::ValidationError, "example3 needs 0 < eps < 1");
  if (const auto* m = std::get_if<IndicatorModulusSeq>(&weights.kind); m && m->m < 1)
    throw Error(ErrorKind::ValidationError, "indicator modulus needs m >= 1");
  if (const auto* m = std::get_if<IndicatorModulusSeq>(&frequencies.kind); m && m->m != 1)
    throw Error(ErrorKind::ValidationError, "indicator frequencies vanish off multiples of m; frequencies must be > 0");
  if (const auto* t = std::get_if<TableSeq>(&weights.kind); t && !(t->fill >= 0.0))
    throw Error(ErrorKind::ValidationError, "negative weight in table fill");
  if (const auto* t = std::get_if<TableSeq>(&frequencies.kind); t && !(t->fill > 0.0 && t->fill <= 1.0))
    throw Error(ErrorKind::ValidationError, "table fill frequency outside (0, 1]");
  std::uint64_t upto = check_upto;
  if (const auto* t = std::get_if<TableSeq>(&weights.kind)) upto = std::max<std::uint64_t>(upto, t->values.size());
  if (const auto* t = std::get_if<TableSeq>(&frequencies.kind)) upto = std::max<std::uint64_t>(upto, t->values.size());
  const auto b = detail::sequence_values<double>(weights, upto, 53);
  const auto a = detail::sequence_values<double>(frequencies, upto, 53);
  for (std::uint64_t k = 1; k <= upto; ++k) {
    if (!std::isfinite(b[k]) || b[k] < 0.0)
      throw Error(ErrorKind::ValidationError, "negative weight b_" + std::to_string(k));
    if (!(a[k] > 0.0 && a[k] <= 1.0))
      throw Error(ErrorKind::ValidationError, "frequency a_" + std::to_string(k) + " outside (0, 1]");
  }
  if (profile) profile->validate();
}

bool WeightedModel::is_integral() const {
  return weights.is_integer_valued() && frequencies.is_identically_one() && inner.has_integer_coefficients();
}

std::uint64_t prime_power_base(std::uint64_t k) {
  if (k < 2) return 0;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return k;  // prime
  while (k % p == 0) k /= p;
  return k == 1 ? p : 0;
}

double von_mangoldt(std::uint64_t k) {
  const auto p = prime_power_base(k);
  return p ? std::log(static_cast<double>(p)) : 0.0;
}

// ---------------------------------------------------------------------------
// Built-in catalogue

namespace {

// "name(arg)" -> {name, arg}
std::pair<std::string, std::string> split_call(const std::string& s) {
  const auto open = s.find('(');
  if (open == std::string::npos) return {s, ""};
  if (s.back() != ')') throw Error(ErrorKind::UnknownModel, "malformed model name '" + s + "'");
  return {s.substr(0, open), s.substr(open + 1, s.size() - open - 2)};
}

double parse_number(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::UnknownModel, "bad parameter '" + s + "' in " + context);
  }
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"partitions", "distinct", "prime-powers", "example3(eps)", "ratio-kernel(p)",
          "q4-indicator", "gcd2", "empty-weights"};
}

WeightedModel builtin(const std::string& full_name) {
  const auto [name, arg] = split_call(full_name);
  WeightedModel m;
  if (name == "partitions" && arg.empty()) {
    m.name = "partitions";
    m.profile = profile_partitions();
  } else if (name == "distinct" && arg.empty()) {
    m.name = "distinct";
    m.inner = InnerSeriesSpec::distinct_binomial();
    m.profile = profile_distinct();
  } else if (name == "prime-powers" && arg.empty()) {
    m.name = "prime-powers";
    m.weights = {VonMangoldtSeq{}};
    m.profile = profile_prime_powers_main_term();
  } else if (name == "example3") {
    const double eps = arg.empty() ? 0.5 : parse_number(arg, full_name);
    m.name = "example3";
    m.weights = {Example3Seq{eps}};
  } else if (name == "ratio-kernel") {
    const double p = arg.empty() ? 3.0 : parse_number(arg, full_name);
    if (!is_integer(p) || p < 1) throw Error(ErrorKind::UnknownModel, "ratio-kernel needs an integer p >= 1");
    m.name = "ratio-kernel";
    m.inner = InnerSeriesSpec::ratio_kernel(static_cast<int>(p));
    m.profile = profile_ratio_kernel(static_cast<int>(p));
  } else if (name == "q4-indicator" && arg.empty()) {
    m.name = "q4-indicator";
    m.weights = {IndicatorModulusSeq{4}};
    m.profile = profile_indicator_partitions(4);
  } else if (name == "gcd2" && arg.empty()) {
    m.name = "gcd2";
    m.inner = InnerSeriesSpec::explicit_series({1.0, 0.0, 1.0}, TailRule::Zero);
  } else if (name == "empty-weights" && arg.empty()) {
    m.name = "empty-weights";
    m.weights = constant_seq(0.0);
  } else {
    throw Error(ErrorKind::UnknownModel, "no built-in model named '" + full_name + "'");
  }
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// JSON schema

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, where + " must be an object");
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items())
    if (!ok.contains(key)) throw Error(ErrorKind::ParseError, "unknown field '" + key + "' in " + where);
}

template <class T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw Error(ErrorKind::ParseError, "missing field '" + std::string(key) + "' in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, "field '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? field<T>(j, key, where) : fallback;
}

SequenceSpec parse_sequence(const json& j, const std::string& where) {
  require_object(j, where);
  const auto kind = field<std::string>(j, "kind", where);
  if (kind == "constant") {
    reject_unknown(j, {"kind", "value"}, where);
    return {ConstantSeq{field<double>(j, "value", where)}};
  }
  if (kind == "power-law") {
    reject_unknown(j, {"kind", "c", "beta"}, where);
    return {PowerLawSeq{field<double>(j, "c", where), field<double>(j, "beta", where)}};
  }
  if (kind == "von-mangoldt") {
    reject_unknown(j, {"kind"}, where);
    return {VonMangoldtSeq{}};
  }
  if (kind == "example3") {
    reject_unknown(j, {"kind", "eps"}, where);
    return {Example3Seq{field<double>(j, "eps", where)}};
  }
  if (kind == "indicator-modulus") {
    reject_unknown(j, {"kind", "m"}, where);
    return {IndicatorModulusSeq{field<int>(j, "m", where)}};
  }
  if (kind == "table") {
    reject_unknown(j, {"kind", "values", "fill"}, where);
    return {TableSeq{field<std::vector<double>>(j, "values", where), field_or<double>(j, "fill", 0.0, where)}};
  }
  throw Error(ErrorKind::ParseError, "unknown sequence kind '" + kind + "' in " + where);
}

json sequence_json(const SequenceSpec& seq) {
  return std::visit(
      [](const auto& s) -> json {
        using K = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<K, ConstantSeq>) return {{"kind", "constant"}, {"value", s.value}};
        else if constexpr (std::is_same_v<K, PowerLawSeq>) return {{"kind", "power-law"}, {"c", s.c}, {"beta", s.beta}};
        else if constexpr (std::is_same_v<K, VonMangoldtSeq>) return {{"kind", "von-mangoldt"}};
        else if constexpr (std::is_same_v<K, Example3Seq>) return {{"kind", "example3"}, {"eps", s.eps}};
        else if constexpr (std::is_same_v<K, IndicatorModulusSeq>) return {{"kind", "indicator-modulus"}, {"m", s.m}};
        else return {{"kind", "table"}, {"values", s.values}, {"fill", s.fill}};
      },
      seq.kind);
}

std::vector<SingularityDescriptor> parse_singularities(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorKind::ParseError, "inner.singularities must be an array");
  std::vector<SingularityDescriptor> out;
  for (const auto& s : arr) {
    const std::string where = "inner.singularities[]";
    require_object(s, where);
    reject_unknown(s, {"re", "im", "order", "kind", "modulus"}, where);
    SingularityDescriptor d;
    d.location = {field<double>(s, "re", where), field<double>(s, "im", where)};
    d.order = field_or<int>(s, "order", 1, where);
    const auto kind = field<std::string>(s, "kind", where);
    if (kind == "pole") d.kind = SingularityKind::Pole;
    else if (kind == "zero") d.kind = SingularityKind::Zero;
    else throw Error(ErrorKind::ParseError, "singularity kind must be 'pole' or 'zero'");
    d.regular_part_modulus = field_or<double>(s, "modulus", 1.0, where);
    out.push_back(d);
  }
  return out;
}

InnerSeriesSpec parse_inner(const json& j) {
  const std::string where = "inner";
  require_object(j, where);
  const auto kind = field<std::string>(j, "kind", where);
  if (kind == "geometric-pole") {
    reject_unknown(j, {"kind"}, where);
    return InnerSeriesSpec::geometric_pole();
  }
  if (kind == "distinct-binomial") {
    reject_unknown(j, {"kind"}, where);
    return InnerSeriesSpec::distinct_binomial();
  }
  if (kind == "ratio-kernel") {
    reject_unknown(j, {"kind", "p"}, where);
    return InnerSeriesSpec::ratio_kernel(field<int>(j, "p", where));
  }
  if (kind == "explicit") {
    reject_unknown(j, {"kind", "coeffs", "tail", "period", "singularities"}, where);
    const auto tail_name = field<std::string>(j, "tail", where);
    TailRule tail;
    if (tail_name == "zero") tail = TailRule::Zero;
    else if (tail_name == "periodic") tail = TailRule::Periodic;
    else throw Error(ErrorKind::ParseError, "inner.tail must be 'zero' or 'periodic'");
    auto sing = j.contains("singularities") ? parse_singularities(j.at("singularities"))
                                            : std::vector<SingularityDescriptor>{};
    return InnerSeriesSpec::explicit_series(field<std::vector<double>>(j, "coeffs", where), tail,
                                            field_or<int>(j, "period", 0, where), std::move(sing));
  }
  throw Error(ErrorKind::ParseError, "unknown inner kind '" + kind + "'");
}

json inner_json(const InnerSeriesSpec& inner) {
  json j = {{"kind", inner.kind_name()}};
  if (const auto* rk = std::get_if<RatioKernel>(&inner.kind())) j["p"] = rk->p;
  if (const auto* e = std::get_if<ExplicitSeries>(&inner.kind())) {
    j["coeffs"] = e->coeffs;
    j["tail"] = e->tail == TailRule::Zero ? "zero" : "periodic";
    if (e->tail == TailRule::Periodic) j["period"] = e->period;
    if (!inner.singularities().empty()) {
      json arr = json::array();
      for (const auto& s : inner.singularities())
        arr.push_back({{"re", s.location.real()},
                       {"im", s.location.imag()},
                       {"order", s.order},
                       {"kind", s.kind == SingularityKind::Pole ? "pole" : "zero"},
                       {"modulus", s.regular_part_modulus}});
      j["singularities"] = arr;
    }
  }
  return j;
}

AsymptoticProfile parse_profile(const json& j) {
  const std::string where = "profile";
  require_object(j, where);
  reject_unknown(j, {"poles", "A0", "h0", "D_neg"}, where);
  AsymptoticProfile p;
  const auto& poles = j.contains("poles") ? j.at("poles") : json::array();
  if (!poles.is_array()) throw Error(ErrorKind::ParseError, "profile.poles must be an array");
  for (const auto& pole : poles) {
    require_object(pole, "profile.poles[]");
    reject_unknown(pole, {"rho", "residue"}, "profile.poles[]");
    p.poles.push_back({field<double>(pole, "rho", "profile.poles[]"), field<double>(pole, "residue", "profile.poles[]")});
  }
  if (p.poles.empty()) throw Error(ErrorKind::ValidationError, "profile needs at least one pole");
  p.A0 = field_or<double>(j, "A0", 0.0, where);
  p.h0 = field_or<double>(j, "h0", 0.0, where);
  p.delta_coeffs = field_or<std::vector<double>>(j, "D_neg", {}, where);
  return p;
}

json profile_json(const AsymptoticProfile& p) {
  json poles = json::array();
  for (const auto& pole : p.poles) poles.push_back({{"rho", pole.rho}, {"residue", pole.residue}});
  return {{"poles", poles}, {"A0", p.A0}, {"h0", p.h0}, {"D_neg", p.delta_coeffs}};
}

}  // namespace

WeightedModel parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  require_object(j, "model");
  reject_unknown(j, {"name", "inner", "weights", "frequencies", "profile"}, "model");
  WeightedModel m;
  m.name = field<std::string>(j, "name", "model");
  if (!j.contains("inner")) throw Error(ErrorKind::ParseError, "missing field 'inner' in model");
  m.inner = parse_inner(j.at("inner"));
  if (!j.contains("weights")) throw Error(ErrorKind::ParseError, "missing field 'weights' in model");
  m.weights = parse_sequence(j.at("weights"), "weights");
  m.frequencies = j.contains("frequencies") ? parse_sequence(j.at("frequencies"), "frequencies") : constant_seq(1.0);
  if (j.contains("profile") && !j.at("profile").is_null()) m.profile = parse_profile(j.at("profile"));
  m.validate();
  return m;
}

WeightedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open model file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string save_model(const WeightedModel& model) {
  json j = {{"name", model.name},
            {"inner", inner_json(model.inner)},
            {"weights", sequence_json(model.weights)},
            {"frequencies", sequence_json(model.frequencies)}};
  if (model.profile) j["profile"] = profile_json(*model.profile);
  return j.dump(2) + "\n";
}

WeightedModel resolve_model(const std::string& source) {
  const bool looks_like_path = source.find('/') != std::string::npos || source.ends_with(".json");
  if (looks_like_path || std::filesystem::exists(source)) return load_model(source);
  return builtin(source);
}

}  // namespace meinardus
