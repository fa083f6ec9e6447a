#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "meinardus/asymptotics.hpp"
#include "meinardus/error.hpp"
#include "meinardus/nllt.hpp"
#include "meinardus/saddle.hpp"
#include "meinardus/series.hpp"

namespace meinardus::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string model = "partitions";
  std::optional<std::uint64_t> n;
  std::vector<std::uint64_t> grid;
  int q_max = 12;
  unsigned bits = BigFloat::kDefaultBits;
  double tol = 1e-30;
  std::string variant = "semi-exact";
  bool compare = false;
  std::string format = "csv";
  std::string output;
  std::optional<double> eps;
  std::vector<double> alpha;
  std::size_t samples = 16;
  std::optional<double> delta;
  std::uint64_t ratio_cap = 5000;
  bool last_only = false;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(num(v)); }

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) return num(*v);
  else return std::to_string(*v);
}

template <class T>
json jopt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) return jnum(*v);
  else return *v;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      const auto& c = cells[i];
      if (c.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
        os << '"';
      } else {
        os << c;
      }
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string method_name(SaddleMethod m) { return m == SaddleMethod::NewtonPolished ? "newton" : "bisection"; }

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::UnknownModel:
    case ErrorKind::InvalidArgument:
      return kInput;
    case ErrorKind::MissingProfile:
    case ErrorKind::NoPositiveMass:
    case ErrorKind::UnsupportedForm:
    case ErrorKind::NotConvergent:
    case ErrorKind::MissingDeltaCoeffs:
    case ErrorKind::PoleAtOne:
      return kModel;
    default:
      return kNumerical;
  }
}

WeightedModel load(const Config& c) {
  auto m = resolve_model(c.model);
  if (c.eps) {
    auto* e = std::get_if<Example3Seq>(&m.weights.kind);
    if (!e) throw Error(ErrorKind::InvalidArgument, "--eps applies only to example3 weights");
    e->eps = *c.eps;
    m.validate();
  }
  return m;
}

PrecisionContext context(const Config& c) {
  PrecisionContext ctx{c.bits, c.tol};
  ctx.validate();
  return ctx;
}

std::vector<std::uint64_t> ns(const Config& c, std::uint64_t fallback) {
  if (!c.grid.empty()) return c.grid;
  return {c.n.value_or(fallback)};
}

// Each command fills either a table or a JSON document.
struct Result {
  std::vector<Table> tables;
  json doc;
};

Result cmd_enumerate(const Config& c) {
  const auto m = load(c);
  const auto ctx = context(c);
  if (!c.n) throw Error(ErrorKind::InvalidArgument, "enumerate needs --n");
  const std::uint64_t N = *c.n;
  const auto e = enumerate_exact(m, N, ctx);
  const bool integral = m.is_integral();
  Table t{{"n", "c_n", "log_c_n"}, {}};
  json rows = json::array();
  for (std::size_t k = c.last_only ? N : 0; k <= N; ++k) {
    const auto& v = e.series.coeffs[k];
    const std::string cs = integral ? v.round_to_integer_string() : v.to_string(20);
    std::optional<double> l;
    if (!v.is_zero()) l = v.log_abs();
    t.rows.push_back({std::to_string(k), cs, opt(l)});
    rows.push_back({{"n", k}, {"c_n", cs}, {"log_c_n", jopt(l)}});
  }
  Result r;
  r.tables.push_back(std::move(t));
  r.doc = {{"model", m.name},
           {"bits_used", e.bits_used},
           {"min_significant_bits", jnum(e.min_significant_bits)},
           {"negative", e.negative},
           {"rows", rows}};
  return r;
}

Result cmd_estimate(const Config& c) {
  const auto m = load(c);
  const auto ctx = context(c);
  const auto variant = parse_variant(c.variant);
  Table t{{"n", "variant", "delta", "n_delta", "log_gen_fn", "gaussian", "log_cn_estimate", "log_cn_exact", "ratio",
           "variance", "L_used", "delta_tail"},
          {}};
  json reports = json::array();
  for (auto n : ns(c, 1000)) {
    const auto e = estimate_cn(m, n, variant, ctx, c.compare);
    t.rows.push_back({std::to_string(n), to_string(e.variant), num(e.delta), num(e.components.n_delta),
                      num(e.components.log_gen_fn), num(e.components.gaussian), num(e.log_cn_estimate),
                      opt(e.log_cn_exact), opt(e.ratio), num(e.variance), std::to_string(e.L_used),
                      opt(e.delta_tail)});
    reports.push_back({{"n", n},
                       {"log_cn_exact", jopt(e.log_cn_exact)},
                       {"log_cn_estimate", jnum(e.log_cn_estimate)},
                       {"delta", jnum(e.delta)},
                       {"components",
                        {{"n_delta", jnum(e.components.n_delta)},
                         {"log_gen_fn", jnum(e.components.log_gen_fn)},
                         {"gaussian", jnum(e.components.gaussian)}}},
                       {"ratio", jopt(e.ratio)},
                       {"variant", to_string(e.variant)},
                       {"variance", jnum(e.variance)},
                       {"L_used", e.L_used},
                       {"delta_tail", jopt(e.delta_tail)}});
  }
  Result r;
  r.tables.push_back(std::move(t));
  r.doc = {{"model", m.name}, {"reports", reports}};
  return r;
}

Result cmd_saddle(const Config& c) {
  const auto m = load(c);
  const auto ctx = context(c);
  Table t{{"n", "delta", "residual", "iterations", "K", "method", "asymptotic_delta", "delta_ratio", "mean", "variance",
           "third"},
          {}};
  json sols = json::array();
  for (auto n : ns(c, 1000)) {
    const auto s = solve_khintchine(m, n, ctx);
    const auto tm = tilted_moments(m, s.delta, s.K);
    std::optional<double> ad, ratio;
    if (m.profile && !m.profile->poles.empty()) {
      ad = asymptotic_delta(*m.profile, static_cast<double>(n));
      ratio = s.delta / *ad;
    }
    t.rows.push_back({std::to_string(n), num(s.delta), num(s.residual), std::to_string(s.iterations),
                      std::to_string(s.K), method_name(s.method), opt(ad), opt(ratio), num(tm.mean),
                      num(tm.variance), num(tm.third)});
    sols.push_back({{"n", n},
                    {"delta", jnum(s.delta)},
                    {"residual", jnum(s.residual)},
                    {"iterations", s.iterations},
                    {"K", s.K},
                    {"method", method_name(s.method)},
                    {"asymptotic_delta", jopt(ad)},
                    {"delta_ratio", jopt(ratio)},
                    {"moments", {{"mean", jnum(tm.mean)}, {"variance", jnum(tm.variance)}, {"third", jnum(tm.third)}}}});
  }
  Result r;
  r.tables.push_back(std::move(t));
  r.doc = {{"model", m.name}, {"solutions", sols}};
  return r;
}

Result cmd_nllt(const Config& c) {
  const auto m = load(c);
  const auto ctx = context(c);
  const auto grid = c.grid.empty() ? std::vector<std::uint64_t>{250, 500, 1000, 2000} : c.grid;
  NlltOptions o;
  o.q_max = c.q_max;
  o.ratio_cap = c.ratio_cap;
  const auto rep = check_nllt(m, grid, o, ctx);

  std::string offending;
  for (std::size_t i = 0; i < rep.offending_q.size(); ++i) offending += (i ? " " : "") + std::to_string(rep.offending_q[i]);
  Table summary{{"model", "gcd_support", "case", "condition_holds", "offending_q", "probe_n"},
                {{m.name, std::to_string(rep.gcd_support), to_string(rep.nllt_case),
                  rep.condition_holds ? "true" : "false", offending, opt(rep.probe_n)}}};
  Table perq{{"q", "fitted", "fitted_constant", "inf_ratio", "slope", "passes", "probe_log_abs"}, {}};
  Table masses{{"q", "n", "mass"}, {}};
  Table ratios{{"n", "prob", "variance", "ratio"}, {}};
  Table notes{{"note"}, {}};
  json jq = json::array();
  for (const auto& q : rep.per_q) {
    perq.rows.push_back({std::to_string(q.q), to_string(q.fitted), num(q.fitted_constant), num(q.inf_ratio),
                         num(q.slope), q.passes ? "true" : "false", opt(q.probe_log_abs)});
    json jm = json::array();
    for (const auto& p : q.masses) {
      masses.rows.push_back({std::to_string(q.q), std::to_string(p.n), num(p.mass)});
      jm.push_back({{"n", p.n}, {"mass", jnum(p.mass)}});
    }
    jq.push_back({{"q", q.q},
                  {"masses", jm},
                  {"fitted", to_string(q.fitted)},
                  {"fitted_constant", jnum(q.fitted_constant)},
                  {"inf_ratio", jnum(q.inf_ratio)},
                  {"slope", jnum(q.slope)},
                  {"passes", q.passes},
                  {"probe_log_abs", jopt(q.probe_log_abs)}});
  }
  json jr = json::array();
  for (const auto& p : rep.ratio_series) {
    ratios.rows.push_back({std::to_string(p.n), num(p.prob), num(p.variance), num(p.ratio)});
    jr.push_back({{"n", p.n}, {"prob", jnum(p.prob)}, {"variance", jnum(p.variance)}, {"ratio", jnum(p.ratio)}});
  }
  for (const auto& s : rep.notes) notes.rows.push_back({s});

  Result r;
  r.tables = {summary, perq, masses, ratios, notes};
  r.doc = {{"model", m.name},
           {"gcd_support", rep.gcd_support},
           {"case", to_string(rep.nllt_case)},
           {"per_q", jq},
           {"condition_holds", rep.condition_holds},
           {"offending_q", rep.offending_q},
           {"ratio_series", jr},
           {"probe_n", jopt(rep.probe_n)},
           {"notes", rep.notes}};
  return r;
}

Result cmd_charfn(const Config& c) {
  const auto m = load(c);
  const auto ctx = context(c);
  if (!c.n) throw Error(ErrorKind::InvalidArgument, "charfn needs --n");
  const std::uint64_t N = *c.n;
  const double delta = c.delta ? *c.delta : solve_khintchine(m, N, ctx).delta;
  std::vector<double> alphas = c.alpha;
  if (alphas.empty()) {
    if (c.samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be >= 1");
    for (std::size_t i = 1; i <= c.samples; ++i) alphas.push_back(0.5 * static_cast<double>(i) / static_cast<double>(c.samples));
  }
  Table t{{"n", "delta", "alpha", "re", "im", "abs", "log_abs"}, {}};
  json samples = json::array();
  for (double a : alphas) {
    const auto s = char_fn(m, N, delta, a);
    t.rows.push_back({std::to_string(s.n), num(delta), num(s.alpha), num(s.value.real()), num(s.value.imag()),
                      num(std::abs(s.value)), num(s.log_abs)});
    samples.push_back({{"n", s.n},
                       {"alpha", jnum(s.alpha)},
                       {"value", {{"re", jnum(s.value.real())}, {"im", jnum(s.value.imag())}}},
                       {"log_abs", jnum(s.log_abs)}});
  }
  Result r;
  r.tables.push_back(std::move(t));
  r.doc = {{"model", m.name}, {"n", N}, {"delta", jnum(delta)}, {"samples", samples}};
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Meinardus-type asymptotics: exact enumeration, saddle points, estimates and local limit checks"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--model,-m", c.model, "builtin name or model JSON file")->capture_default_str();
    s->add_option("--bits", c.bits, "working precision of the exact engine")->capture_default_str();
    s->add_option("--tol", c.tol, "truncation tolerance")->capture_default_str();
    s->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    s->add_option("--output,-o", c.output, "write to this file instead of stdout");
    s->add_option("--eps", c.eps, "override eps of example3 weights");
  };
  auto with_n = [&](CLI::App* s) { s->add_option("--n,-n", c.n, "size"); };
  auto with_grid = [&](CLI::App* s) { s->add_option("--grid", c.grid, "comma-separated n values")->delimiter(','); };

  auto* en = app.add_subcommand("enumerate", "exact c_0..c_n");
  common(en);
  with_n(en);
  en->add_flag("--last", c.last_only, "only the row for n");

  auto* es = app.add_subcommand("estimate", "asymptotic estimate of log c_n");
  common(es);
  with_n(es);
  with_grid(es);
  es->add_option("--variant", c.variant, "semi-exact | pure")->capture_default_str();
  es->add_flag("--compare", c.compare, "enumerate c_n exactly when n <= 5000");

  auto* sa = app.add_subcommand("saddle", "saddle point delta_n and tilted moments");
  common(sa);
  with_n(sa);
  with_grid(sa);

  auto* nl = app.add_subcommand("nllt", "local limit conditions and ratio series");
  common(nl);
  with_grid(nl);
  nl->add_option("--q-max", c.q_max, "largest q checked")->capture_default_str();
  nl->add_option("--ratio-cap", c.ratio_cap, "ratio series only for n up to this")->capture_default_str();

  auto* cf = app.add_subcommand("charfn", "characteristic function of Z_n");
  common(cf);
  with_n(cf);
  cf->add_option("--alpha", c.alpha, "comma-separated alpha values in [-1/2, 1/2]")->delimiter(',');
  cf->add_option("--samples", c.samples, "evenly spaced alpha in (0, 1/2] when --alpha is absent")->capture_default_str();
  cf->add_option("--delta", c.delta, "use this delta instead of delta_n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  Result r;
  try {
    if (en->parsed()) r = cmd_enumerate(c);
    else if (es->parsed()) r = cmd_estimate(c);
    else if (sa->parsed()) r = cmd_saddle(c);
    else if (nl->parsed()) r = cmd_nllt(c);
    else r = cmd_charfn(c);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }

  std::ostringstream buf;
  if (c.format == "json") {
    buf << r.doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
      if (i) buf << '\n';
      write_csv(buf, r.tables[i]);
    }
  }
  if (c.output.empty()) {
    out << buf.str();
    return kOk;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f || !(f << buf.str())) {
    err << "error: cannot write '" << c.output << "'\n";
    return kIo;
  }
  return kOk;
}

}  // namespace meinardus::cli
