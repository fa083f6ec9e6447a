#include "meinardus/nllt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "meinardus/detail/kernels.hpp"
#include "meinardus/error.hpp"
#include "meinardus/saddle.hpp"

namespace meinardus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxXiTerms = 5'000'000;

using cplx = std::complex<double>;

// 1 - e^z without cancellation near z = 0.
cplx one_minus_exp(cplx z) {
  const double x = z.real(), y = z.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return -cplx(re, im);
}

// log S(e^z), closed form through the rational representation.
cplx log_inner_closed(const InnerSeriesSpec& inner, cplx z) {
  cplx out = 0.0;
  const auto& num = inner.numerator();
  if (num.size() == 2 && num[1] == 1.0) {
    out += std::log(one_minus_exp(z + cplx(0.0, kPi)));  // 1 + w
  } else if (num.size() > 1) {
    const cplx w = std::exp(z);
    cplx acc = 0.0;
    for (std::size_t j = num.size(); j-- > 0;) acc = acc * w + num[j];
    out += std::log(acc);
  }
  if (const int T = inner.denominator_period(); T > 0) out -= std::log(one_minus_exp(static_cast<double>(T) * z));
  return out;
}

// xi_j in double, grown on demand.
class XiTable {
 public:
  explicit XiTable(const InnerSeriesSpec& inner) : inner_(inner) {}
  const std::vector<double>& upto(std::size_t J) {
    if (J > kMaxXiTerms) throw Error(ErrorKind::SeriesDivergence, "xi-series needs more than 5e6 terms");
    if (xi_.size() <= J) xi_ = detail::log_coefficients<double>(inner_, std::max(J, 2 * xi_.size()), 53);
    return xi_;
  }

 private:
  const InnerSeriesSpec& inner_;
  std::vector<double> xi_;
};

cplx log_inner_xi(XiTable& table, cplx z) {
  const double r = z.real();  // log |w|
  if (!(r < 0.0)) throw Error(ErrorKind::SeriesDivergence, "|w| >= 1 in the xi-series of log S");
  const auto J = static_cast<std::size_t>(std::ceil(41.5 / -r)) + 8;
  const auto& xi = table.upto(J);
  const cplx w = std::exp(z);
  cplx p = 1.0, acc = 0.0;
  for (std::size_t j = 1; j <= J; ++j) {
    p *= w;
    acc += xi[j] * p;
  }
  return acc;
}

bool uses_xi_series(const InnerSeriesSpec& inner) { return std::holds_alternative<ExplicitSeries>(inner.kind()); }

// Fractional part of alpha*k in [-1/2, 1/2], exact product via fma.
double frac_product(double alpha, double k) {
  const double p = alpha * k;
  const double r = std::round(p);
  return std::fma(alpha, k, -r);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<double> values_upto(const SequenceSpec& s, std::uint64_t n) {
  return detail::sequence_values<double>(s, n, 53);
}

}  // namespace

std::string to_string(NlltCase c) {
  switch (c) {
    case NlltCase::A: return "A";
    case NlltCase::B: return "B";
    case NlltCase::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::Vanishing: return "vanishing";
    case GrowthClass::LogN: return "log n";
    case GrowthClass::Log2N: return "log^2 n";
    case GrowthClass::Power: return "n";
  }
  return "?";
}

std::complex<double> log_inner(const InnerSeriesSpec& inner, std::complex<double> w, LogPath path) {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorKind::SeriesDivergence, "|w| >= 1 in log S(w)");
  if (w == 0.0) return 0.0;
  const cplx z = std::log(w);
  if (path == LogPath::ClosedForm) return log_inner_closed(inner, z);
  XiTable table(inner);
  return log_inner_xi(table, z);
}

std::uint64_t gcd_support(const InnerSeriesSpec& inner, std::size_t Jmax) {
  const std::size_t ext = inner.certified_extent();
  std::uint64_t g = 0;
  for (std::size_t j = 1; j < ext && j <= Jmax; ++j)
    if (inner.d(j) > 0.0) g = std::gcd(g, static_cast<std::uint64_t>(j));
  if (g == 0) throw Error(ErrorKind::Unstabilized, "no d_j > 0 with j <= " + std::to_string(Jmax));
  if (g != 1 && ext > Jmax + 1)
    throw Error(ErrorKind::Unstabilized,
                "support gcd " + std::to_string(g) + " not certified: pattern needs j < " + std::to_string(ext));
  return g;
}

double weight_mass(const WeightedModel& model, std::uint64_t n, int q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  const auto b = values_upto(model.weights, n);
  long double sum = 0.0L;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (k % static_cast<std::uint64_t>(q)) sum += b[k];
  return static_cast<double>(sum);
}

NlltCase classify_case(const InnerSeriesSpec& inner) {
  bool pole = false, zero = false;
  for (const auto& s : inner.singularities()) {
    if (s.kind == SingularityKind::Pole && std::abs(s.location - cplx(1.0, 0.0)) > 1e-12) pole = true;
    if (s.kind == SingularityKind::Zero) zero = true;
  }
  if (pole) return NlltCase::A;
  if (zero) return NlltCase::B;
  return NlltCase::NotApplicable;
}

double log_truncated_gen_fn(const WeightedModel& model, std::uint64_t n, double delta) {
  const auto b = values_upto(model.weights, n);
  const auto a = values_upto(model.frequencies, n);
  long double sum = 0.0L;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (b[k] == 0.0) continue;
    const double z = std::log(a[k]) - static_cast<double>(k) * delta;
    if (!(z < 0.0)) throw Error(ErrorKind::SeriesDivergence, "a_k e^{-k delta} >= 1");
    sum += static_cast<long double>(b[k]) * log_inner_closed(model.inner, z).real();
  }
  return static_cast<double>(sum);
}

double variance_Zn(const WeightedModel& model, std::uint64_t n, double delta) {
  const auto b = values_upto(model.weights, n);
  const auto a = values_upto(model.frequencies, n);
  XiTable table(model.inner);
  long double total = 0.0L;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (b[k] == 0.0) continue;
    const double lx = std::log(a[k]) - static_cast<double>(k) * delta;
    const auto J = static_cast<std::size_t>(std::ceil(46.0 / -lx)) + 5;
    const auto& xi = table.upto(J);
    const long double x = std::exp(static_cast<long double>(lx));
    long double p = 1.0L, s = 0.0L;
    for (std::size_t j = 1; j <= J; ++j) {
      p *= x;
      s += static_cast<long double>(j) * static_cast<long double>(j) * xi[j] * p;
    }
    const long double kk = static_cast<long double>(k);
    total += static_cast<long double>(b[k]) * kk * kk * s;
  }
  return static_cast<double>(total);
}

double prob_from_log_cn(const WeightedModel& model, std::uint64_t n, double delta, std::optional<double> log_cn,
                        double tol) {
  if (!log_cn) return 0.0;
  const double logP = *log_cn - static_cast<double>(n) * delta - log_truncated_gen_fn(model, n, delta);
  const double P = std::exp(logP);
  if (!(P >= 0.0 && P <= 1.0 + tol))
    throw Error(ErrorKind::OutOfRange, "P(Z_n = n) = " + std::to_string(P) + " outside [0, 1]");
  return P;
}

double prob_exact(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx) {
  const auto sol = solve_khintchine(model, n, ctx);
  const auto e = enumerate_exact(model, n, ctx);
  const BigFloat& c = e.series.coeffs[n];
  if (c.sign() < 0) throw Error(ErrorKind::OutOfRange, "c_n < 0, P(Z_n = n) undefined");
  return prob_from_log_cn(model, n, sol.delta, c.is_zero() ? std::nullopt : std::optional<double>(c.log_abs()));
}

namespace {

// phi_n at many alpha for fixed (model, n, delta).
class CharFnEvaluator {
 public:
  CharFnEvaluator(const WeightedModel& model, std::uint64_t n, double delta)
      : model_(model), n_(n), xi_path_(uses_xi_series(model.inner)), table_(model.inner) {
    if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
    const auto b = values_upto(model.weights, n);
    const auto a = values_upto(model.frequencies, n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (b[k] == 0.0) continue;
      const double x = std::log(a[k]) - static_cast<double>(k) * delta;
      if (!(x < 0.0)) throw Error(ErrorKind::SeriesDivergence, "|a_k e^{-k delta}| >= 1");
      if (x < -46.0) continue;  // both logs below 1e-20
      terms_.push_back({static_cast<double>(k), b[k], x, eval(cplx(x, 0.0))});
    }
  }

  CharFnSample operator()(double alpha) {
    if (!(std::fabs(alpha) <= 0.5)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in [-1/2, 1/2]");
    cplx total = 0.0;
    for (const auto& t : terms_) {
      const double y = kTwoPi * frac_product(alpha, t.k);
      if (y == 0.0) continue;
      total += t.b * (eval(cplx(t.x, y)) - t.base);
    }
    CharFnSample s;
    s.n = n_;
    s.alpha = alpha;
    s.log_abs = total.real();
    s.value = std::exp(total);
    return s;
  }

 private:
  struct Term {
    double k, b, x;
    cplx base;
  };
  cplx eval(cplx z) { return xi_path_ ? log_inner_xi(table_, z) : log_inner_closed(model_.inner, z); }

  const WeightedModel& model_;
  std::uint64_t n_;
  bool xi_path_;
  XiTable table_;
  std::vector<Term> terms_;
};

}  // namespace

CharFnSample char_fn(const WeightedModel& model, std::uint64_t n, double delta, double alpha) {
  if (!(std::fabs(alpha) <= 0.5)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in [-1/2, 1/2]");
  return CharFnEvaluator(model, n, delta)(alpha);
}

double u_term(const WeightedModel& model, std::uint64_t n, std::uint64_t k, double alpha, double delta, LogPath path) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, "u_term needs 1 <= k <= n");
  const double kd = static_cast<double>(k);
  const double x = std::log(model.frequencies.at(k)) - kd * delta;
  const double y = kTwoPi * frac_product(alpha, kd);
  if (y == 0.0) return 0.0;
  if (path == LogPath::ClosedForm)
    return 2.0 * (log_inner_closed(model.inner, cplx(x, 0.0)).real() - log_inner_closed(model.inner, cplx(x, y)).real());
  XiTable table(model.inner);
  return 2.0 * (log_inner_xi(table, cplx(x, 0.0)).real() - log_inner_xi(table, cplx(x, y)).real());
}

double split_point(const WeightedModel& model, std::uint64_t n, double delta) {
  const double rho = model.growth_exponent();
  const double a0 = std::pow(delta, 0.5 * (rho + 2.0)) * std::log(static_cast<double>(n));
  return std::clamp(a0, 0.0, 0.5);
}

IntegralCheck integral_check(const WeightedModel& model, std::uint64_t n, const PrecisionContext& ctx) {
  const auto sol = solve_khintchine(model, n, ctx);
  IntegralCheck out;
  out.n = n;
  out.delta = sol.delta;
  out.alpha0 = split_point(model, n, sol.delta);
  out.gaussian = 1.0 / std::sqrt(kTwoPi * variance_Zn(model, n, sol.delta));

  const double nd = static_cast<double>(n);
  CharFnEvaluator phi(model, n, sol.delta);
  auto g = [&](double alpha) {
    const auto s = phi(alpha);
    return 2.0 * (s.value * std::polar(1.0, -kTwoPi * frac_product(alpha, nd))).real();
  };

  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double width = 0.5 / nd;
  // phi carries ~1e-14 relative noise from the k-sum; 1e-12 is the refinement
  // goal, 1e-9 the acceptance bound
  const double density = 1e-12 * out.gaussian / 0.5;
  std::function<double(double, double, int, double&)> refine = [&](double a, double b, int depth, double& err) {
    double e = 0.0;
    const double v = GK::integrate(g, a, b, 0, 0.0, &e);
    if (e <= density * (b - a) || depth == 0) {
      err += e;
      return v;
    }
    const double m = 0.5 * (a + b);
    return refine(a, m, depth - 1, err) + refine(m, b, depth - 1, err);
  };
  auto integrate = [&](double lo, double hi, double& err_sum) {
    double total = 0.0;
    // pieces aligned to the half-periods of e^{-2 pi i n alpha}
    double a = lo;
    while (a < hi) {
      double b = std::min(hi, (std::floor(a / width + 1e-9) + 1.0) * width);
      if (b - a < 1e-15) b = std::min(hi, b + width);
      total += refine(a, b, 4, err_sum);
      ++out.pieces;
      a = b;
    }
    return total;
  };
  double e1 = 0.0, e2 = 0.0;
  out.I1 = out.alpha0 > 0.0 ? integrate(0.0, out.alpha0, e1) : 0.0;
  out.I2 = out.alpha0 < 0.5 ? integrate(out.alpha0, 0.5, e2) : 0.0;
  out.total = out.I1 + out.I2;
  out.abs_error = e1 + e2;
  const double target = 1e-9 * std::max({out.gaussian, std::fabs(out.I1), std::fabs(out.I2)});
  if (!(out.abs_error <= target))
    throw Error(ErrorKind::QuadratureNotConverged, "estimated quadrature errors " + sci(e1) + " (I1), " + sci(e2) +
                                                       " (I2) above target " + sci(target));
  return out;
}

double min_log_decay(const WeightedModel& model, std::uint64_t n, double delta, std::size_t samples) {
  const double a0 = split_point(model, n, delta);
  CharFnEvaluator phi(model, n, delta);
  double best = HUGE_VAL;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double alpha = a0 + (0.5 - a0) * static_cast<double>(i) / static_cast<double>(samples);
    if (alpha <= 0.0) continue;
    best = std::min(best, -phi(alpha).log_abs);
  }
  return best;
}

namespace {

double requirement(NlltCase c, double n) {
  const double l = std::log(n);
  return c == NlltCase::B ? l * l : l;
}

}  // namespace

NlltReport check_nllt(const WeightedModel& model, const std::vector<std::uint64_t>& n_grid, const NlltOptions& opts,
                      const PrecisionContext& ctx) {
  if (n_grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty n grid");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1]) throw Error(ErrorKind::InvalidArgument, "n grid must be increasing");
  if (n_grid.front() < 2) throw Error(ErrorKind::InvalidArgument, "n grid must start at 2 or above");
  if (opts.q_max < 2) throw Error(ErrorKind::InvalidArgument, "q_max must be >= 2");

  NlltReport r;
  r.gcd_support = gcd_support(model.inner, std::max<std::size_t>(64, model.inner.certified_extent()));
  r.nllt_case = classify_case(model.inner);
  bool has_pole = false, has_zero = false;
  for (const auto& s : model.inner.singularities()) {
    has_pole |= s.kind == SingularityKind::Pole && std::abs(s.location - cplx(1.0, 0.0)) > 1e-12;
    has_zero |= s.kind == SingularityKind::Zero;
  }
  if (has_pole && has_zero) r.notes.push_back("unit-circle pole and zero both declared; case A bound applied");
  if (r.nllt_case == NlltCase::NotApplicable) r.notes.push_back("no complex unit-circle singularity; log n bound applied");
  if (r.gcd_support != 1) r.notes.push_back("gcd of the support of d_j is " + std::to_string(r.gcd_support));

  const std::uint64_t n_max = n_grid.back();
  const auto b = values_upto(model.weights, n_max);

  std::uint64_t probe = 0;
  double probe_delta = 0.0;
  if (opts.probes) {
    try {
      probe = n_max;
      probe_delta = solve_khintchine(model, probe, ctx).delta;
      r.probe_n = probe;
    } catch (const Error&) {
      probe = 0;
    }
  }

  bool all_pass = true;
  for (int q = 2; q <= opts.q_max; ++q) {
    QCheck qc;
    qc.q = q;
    long double run = 0.0L;
    std::uint64_t k = 0;
    for (std::uint64_t n : n_grid) {
      for (; k < n; ++k)
        if ((k + 1) % static_cast<std::uint64_t>(q)) run += b[k + 1];
      qc.masses.push_back({n, static_cast<double>(run)});
    }
    // single-constant least squares against each growth shape
    double mnorm = 0.0;
    for (const auto& m : qc.masses) mnorm += m.mass * m.mass;
    if (mnorm == 0.0) {
      qc.fitted = GrowthClass::Vanishing;
    } else {
      double best = HUGE_VAL;
      for (GrowthClass cls : {GrowthClass::LogN, GrowthClass::Log2N, GrowthClass::Power}) {
        std::vector<double> h;
        for (const auto& m : qc.masses) {
          const double x = static_cast<double>(m.n), l = std::log(x);
          h.push_back(cls == GrowthClass::LogN ? l : cls == GrowthClass::Log2N ? l * l : x);
        }
        double mh = 0.0, hh = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
          mh += qc.masses[i].mass * h[i];
          hh += h[i] * h[i];
        }
        const double C = mh / hh;
        double res = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) res += std::pow(qc.masses[i].mass - C * h[i], 2);
        res = std::sqrt(res / mnorm);
        if (res < best) {
          best = res;
          qc.fitted = cls;
          qc.fitted_constant = C;
        }
      }
    }
    qc.inf_ratio = HUGE_VAL;
    bool positive = true;
    for (const auto& m : qc.masses) {
      qc.inf_ratio = std::min(qc.inf_ratio, m.mass / requirement(r.nllt_case, static_cast<double>(m.n)));
      positive &= m.mass > 0.0;
    }
    if (positive && qc.masses.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double cnt = static_cast<double>(qc.masses.size());
      for (const auto& m : qc.masses) {
        const double x = std::log(std::log(static_cast<double>(m.n)));
        const double y = std::log(m.mass / requirement(r.nllt_case, static_cast<double>(m.n)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      qc.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    }
    qc.passes = positive && (qc.masses.size() < 2 || qc.slope >= -0.25);
    if (probe) qc.probe_log_abs = char_fn(model, probe, probe_delta, 1.0 / q).log_abs;
    if (!qc.passes) {
      all_pass = false;
      r.offending_q.push_back(q);
    }
    r.per_q.push_back(std::move(qc));
  }
  r.condition_holds = r.gcd_support == 1 && all_pass;

  // ratio series on the enumerable part of the grid
  std::vector<std::uint64_t> small;
  for (std::uint64_t n : n_grid)
    if (n <= opts.ratio_cap) small.push_back(n);
  if (!small.empty()) {
    const auto e = enumerate_exact(model, small.back(), ctx);
    for (std::uint64_t n : small) {
      const BigFloat& c = e.series.coeffs[n];
      if (c.sign() < 0) throw Error(ErrorKind::OutOfRange, "c_n < 0 at n = " + std::to_string(n));
      const auto sol = solve_khintchine(model, n, ctx);
      RatioPoint p;
      p.n = n;
      p.prob = prob_from_log_cn(model, n, sol.delta, c.is_zero() ? std::nullopt : std::optional<double>(c.log_abs()));
      p.variance = variance_Zn(model, n, sol.delta);
      p.ratio = std::sqrt(kTwoPi * p.variance) * p.prob;
      r.ratio_series.push_back(p);
    }
  }
  return r;
}

}  // namespace meinardus
