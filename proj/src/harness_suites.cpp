#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "hoft/errors.hpp"
#include "hoft/harness.hpp"

namespace hoft {
namespace {

struct Row {
  Row(std::string id_, double lhs_, double rhs_, bool included_ = true, std::string note_ = "")
      : id(std::move(id_)), lhs(lhs_), rhs(rhs_), included(included_), note(std::move(note_)) {}
  std::string id;
  double lhs;
  double rhs;
  bool included;
  std::string note;
};
using Rows = std::vector<Row>;

std::string tag(const std::string& key, double v) { return key + "=" + format_number(v); }

std::string group_of(const std::string& id) {
  const auto k = id.find('|');
  return k == std::string::npos ? std::string() : id.substr(0, k);
}

double ratio_of(const Row& r) { return (r.lhs == 0.0 && r.rhs == 0.0) ? 0.0 : r.lhs / r.rhs; }

void add_rows(InequalityReport& rep, const Rows& rows) {
  for (const auto& r : rows) {
    auto& row = rep.add_row(r.id, r.lhs, r.rhs, r.note);
    row.included = r.included;
  }
}

std::map<std::string, double> group_max(const Rows& rows) {
  std::map<std::string, double> out;
  for (const auto& r : rows) {
    if (!r.included) continue;
    auto& m = out[group_of(r.id)];
    m = std::max(m, ratio_of(r));
  }
  return out;
}

void add_refinement_checks(InequalityReport& rep, const Rows& base, const Rows& fine, double tol, int factor) {
  const auto b = group_max(base);
  const auto f = group_max(fine);
  for (const auto& [g, vb] : b) {
    const auto it = f.find(g);
    const double vf = it == f.end() ? kInfinity : it->second;
    const double change = vb == 0.0 ? (vf == 0.0 ? 0.0 : kInfinity) : std::abs(vf / vb - 1.0);
    rep.add_check(g.empty() ? "refinement" : "refinement_" + g, change, tol, change <= tol,
                  "max ratio " + format_number(vb) + " -> " + format_number(vf) + " with grids x" +
                      std::to_string(factor));
  }
}

void add_scalar_refinement(InequalityReport& rep, const std::string& name, double base, double fine, double tol,
                           int factor) {
  const double change = base == 0.0 ? (fine == 0.0 ? 0.0 : kInfinity) : std::abs(fine / base - 1.0);
  rep.add_check(name, change, tol, change <= tol,
                format_number(base) + " -> " + format_number(fine) + " with grids x" + std::to_string(factor));
}

void add_degeneration(InequalityReport& rep, const std::string& name, const Rows& rows, const std::string& group,
                      double tol = 1e-3) {
  double worst = 0.0;
  bool any = false;
  for (const auto& r : rows) {
    if (group_of(r.id) != group || !r.included) continue;
    any = true;
    worst = std::max(worst, std::abs(ratio_of(r) - 1.0));
  }
  if (any) rep.add_check(name, worst, tol, worst <= tol, "max |ratio - 1| over " + group);
}

InequalityReport new_report(const std::string& inequality, const Workspace* ws) {
  InequalityReport rep;
  rep.inequality = inequality;
  if (ws) {
    rep.datum = ws->datum().describe();
    rep.grid = ws->metadata(ws->settings().refine);
  }
  return rep;
}

SuiteOutput finish(InequalityReport rep, std::vector<PlotSeries> plots = {}) {
  rep.finalize();
  return SuiteOutput{std::move(rep), std::move(plots)};
}

// (scale * sum_j |g_j|^q weight_j mass_j)^{1/q}
double spectral_norm(const SpectralFunction& g, const WeightedMeasure& m, double q, const std::vector<double>* weight,
                     double scale = 1.0) {
  const auto& mass = m.masses();
  double sum = 0.0;
  for (std::size_t j = 0; j < mass.size(); ++j) {
    const double a = std::abs(g.values[j]);
    if (a == 0.0) continue;
    sum += std::pow(a, q) * mass[j] * (weight ? (*weight)[j] : 1.0);
  }
  return std::pow(scale * sum, 1.0 / q);
}

double sup_abs(const SpectralFunction& g) {
  double s = 0.0;
  for (const auto& v : g.values) s = std::max(s, std::abs(v));
  return s;
}

std::vector<double> spectral_power(const RadialGrid& grid, const std::function<double(double)>& w) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double xi : grid.nodes()) out.push_back(w(xi));
  return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

void require_rank_one(const Workspace& ws, const std::string& suite) {
  if (!ws.datum().is_rank_one()) throw ConfigError(suite + ": rank-one datum required, got " + ws.datum().describe());
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

// Guarded sampling: the decay guard throws ConfigError naming the condition.
const SampledFunction& guarded(Workspace& ws, Level& L, const TestFunctionSpec& spec, double growth,
                               const std::string& condition) {
  const SampledFunction& f = ws.function(L, spec);
  require_decay(f, growth, condition);
  return f;
}

std::vector<TestFunctionSpec> resolved(const Workspace& ws, const Family& family) {
  std::vector<TestFunctionSpec> out;
  for (const auto& s : family) out.push_back(ws.resolve(s));
  return out;
}

std::vector<StepFunction> step_outputs(const std::vector<std::vector<double>>& values, const WeightedMeasure& m,
                                       const std::vector<double>& mass_factor) {
  std::vector<StepFunction> out;
  for (const auto& v : values) {
    StepFunction s;
    s.values = v;
    s.masses = m.masses();
    for (std::size_t j = 0; j < s.masses.size(); ++j) s.masses[j] *= mass_factor[j];
    out.push_back(std::move(s));
  }
  return out;
}

// ---- flat tensor machinery ----

std::vector<double> flat_axes(const RootDatum& d) {
  return d.is_rank_one() ? std::vector<double>{d.beta()} : d.multiplicities();
}

// Index past which the non-negative tail sum of a is below 1e-18 of the total.
std::size_t support_end(const std::vector<double>& a) {
  double total = 0.0;
  for (double v : a) total += v;
  double tail = 0.0;
  std::size_t k = a.size();
  while (k > 0 && tail + a[k - 1] <= 1e-18 * total) tail += a[--k];
  return k;
}

// sum over the tensor grid of prod_i a_i[j_i] * |y|^s with y_i = coords_i[j_i]
double tensor_radial_sum(const std::vector<std::vector<double>>& a, const std::vector<const std::vector<double>*>& y,
                         double s) {
  const std::size_t n = a.size();
  if (s == 0.0) {
    double prod = 1.0;
    for (const auto& v : a) {
      double sum = 0.0;
      for (double x : v) sum += x;
      prod *= sum;
    }
    return prod;
  }
  std::vector<std::size_t> end(n);
  for (std::size_t i = 0; i < n; ++i) end[i] = support_end(a[i]);
  for (std::size_t i = 0; i < n; ++i)
    if (end[i] == 0) return 0.0;
  double total = 0.0;
  std::vector<std::size_t> idx(n, 0);
  const std::size_t last = n - 1;
  const auto& ylast = *y[last];
  const auto& alast = a[last];
  while (true) {
    double prefix = 1.0, r2 = 0.0;
    for (std::size_t i = 0; i < last; ++i) {
      prefix *= a[i][idx[i]];
      const double v = (*y[i])[idx[i]];
      r2 += v * v;
    }
    if (prefix != 0.0) {
      double inner = 0.0;
      for (std::size_t j = 0; j < end[last]; ++j) {
        const double rr = r2 + ylast[j] * ylast[j];
        inner += alast[j] * std::exp(0.5 * s * std::log(rr));
      }
      total += prefix * inner;
    }
    std::size_t k = last;
    while (k > 0) {
      --k;
      if (++idx[k] < end[k]) break;
      idx[k] = 0;
      if (k == 0) return total;
    }
    if (last == 0) return total;
  }
}

struct FlatData {
  std::vector<std::vector<const SpectralFunction*>> hat;  // [axis][member]
  std::vector<std::vector<SampledFunction>> f;            // [axis][member]
  std::vector<double> m;
  const RadialGrid* x = nullptr;
  const RadialGrid* spectral = nullptr;
  double kappa0 = 1.0;
};

FlatData flat_data(Workspace& ws, Level& L, const Family& family) {
  FlatData d;
  d.m = flat_axes(ws.datum());
  d.kappa0 = ws.flat_datum().flat_kappa();
  d.x = L.x.get();
  d.spectral = L.spectral.get();
  for (double m : d.m) {
    d.hat.push_back(ws.axis_transforms(L, family, m));
    std::vector<SampledFunction> fs;
    for (const auto& s : family) fs.push_back(ws.axis_function(L, s, m));
    d.f.push_back(std::move(fs));
  }
  return d;
}

// (kappa0 int |F0 f|^q omega^{1+e} |xi|^s d xi)^{1/q}
double flat_spectral(const FlatData& d, std::size_t member, double q, double e, double s) {
  std::vector<std::vector<double>> a;
  std::vector<const std::vector<double>*> y;
  const auto& xi = d.spectral->nodes();
  const auto& w = d.spectral->weights();
  for (std::size_t i = 0; i < d.m.size(); ++i) {
    std::vector<double> v(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j) {
      const double g = std::abs(d.hat[i][member]->values[j]);
      v[j] = g == 0.0 ? 0.0 : std::pow(g, q) * std::pow(xi[j], d.m[i] * (1.0 + e)) * w[j];
    }
    a.push_back(std::move(v));
    y.push_back(&xi);
  }
  return std::pow(d.kappa0 * tensor_radial_sum(a, y, s), 1.0 / q);
}

// (int |f|^p omega^e |x|^s d mu0)^{1/p}
double flat_spatial(const FlatData& d, std::size_t member, double p, double e, double s) {
  std::vector<std::vector<double>> a;
  std::vector<const std::vector<double>*> y;
  const auto& x = d.x->nodes();
  for (std::size_t i = 0; i < d.m.size(); ++i) {
    const auto& f = d.f[i][member];
    const auto& mass = f.measure->masses();
    std::vector<double> v(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double g = std::abs(f.values[j]);
      v[j] = g == 0.0 ? 0.0 : std::pow(g, p) * std::pow(x[j], d.m[i] * e) * mass[j];
    }
    a.push_back(std::move(v));
    y.push_back(&x);
  }
  return std::pow(tensor_radial_sum(a, y, s), 1.0 / p);
}

std::string flat_describe(const RootDatum& d) {
  return d.is_rank_one() ? "flat limit of " + d.describe() : d.describe();
}

double conjugate(double p) { return p / (p - 1.0); }

}  // namespace

// ---------------------------------------------------------------------------

SuiteOutput check_plancherel(Workspace& ws, const Family& family) {
  require_rank_one(ws, "plancherel");
  auto rep = new_report("plancherel", &ws);
  Level& L = ws.level(1);
  const auto hats = ws.transforms(L, family, 0.0);
  Rows rows;
  double worst = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& f = ws.function(L, family[i]);
    Row r{f.id, spectral_norm(*hats[i], *L.nu, 2.0, nullptr), lp_norm(f, 2.0)};
    worst = std::max(worst, std::abs(ratio_of(r) - 1.0));
    rows.push_back(r);
  }
  add_rows(rep, rows);
  const double kappa = ws.datum().kappa();
  const double closed = kappa_closed_form(ws.datum());
  rep.add_parameter("kappa", kappa);
  rep.add_parameter("kappa_closed_form", closed);
  rep.add_check("isometry", worst, 1e-3, worst <= 1e-3, "max |ratio - 1| over the family");
  const double dk = std::abs(kappa / closed - 1.0);
  rep.add_check("kappa_vs_closed_form", dk, 1e-3, dk <= 1e-3, "calibrated kappa against 1/(2 pi)");
  rep.add_note("calibration", "kappa calibrated on " + ws.settings().calibration.id() + ", excluded from the family");
  rep.add_note("measure", "d nu = kappa |c(i xi)|^{-2} d xi on xi >= 0");
  rep.bound = 1.0 + 1e-3;
  return finish(std::move(rep));
}

SuiteOutput check_inversion(Workspace& ws, const Family& family) {
  require_rank_one(ws, "inversion");
  auto rep = new_report("inversion", &ws);
  Level& L = ws.level(1);
  const auto hats = ws.transforms(L, family, 0.0);
  std::vector<SpectralFunction> gs;
  for (auto* h : hats) gs.push_back(*h);
  const auto back = ho_inverse(ws.datum(), gs, L.mu);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& f = ws.function(L, family[i]);
    SampledFunction diff = f;
    for (std::size_t k = 0; k < diff.values.size(); ++k) diff.values[k] -= back[i].values[k];
    rep.add_row(f.id, lp_norm(diff, 2.0), lp_norm(f, 2.0), "relative L2(mu) roundtrip error");
  }
  rep.bound = 1e-3;
  return finish(std::move(rep));
}

SuiteOutput check_kernel_bound(Workspace& ws, const std::vector<double>& xis, int samples) {
  require_rank_one(ws, "kernel_bound");
  require_range(samples >= 2, "kernel_bound: samples must be >= 2");
  auto rep = new_report("kernel_bound", &ws);
  const RootDatum& d = ws.datum();
  const double rho = d.rho();
  const double x_max = ws.settings().x_grid.x_max;
  std::vector<double> x(samples);
  for (int i = 0; i < samples; ++i) x[i] = x_max * i / (samples - 1);
  for (double xi : xis) {
    require_range(xi >= 0.0, "kernel_bound: xi must be >= 0");
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const double eta = -rho + 2.0 * rho * k / (samples - 1);
      for (const auto& v : phi_sweep(d, Complex(eta, xi), x)) worst = std::max(worst, std::abs(v));
    }
    rep.add_row(tag("xi", xi), worst, 1.0, "max |phi_{i xi + eta}(x)| over |eta| <= rho, x in [0, x_max]");
  }
  rep.add_parameter("samples", samples);
  rep.bound = 1.0 + 1e-8;
  return finish(std::move(rep));
}

SuiteOutput check_c_function(Workspace& ws) {
  require_rank_one(ws, "c_function");
  auto rep = new_report("c_function", &ws);
  const RootDatum& d = ws.datum();
  const double beta = d.beta();
  const double c_rho = std::abs(c_function(d, Complex(d.rho(), 0.0)) - 1.0);
  rep.add_check("c_rho", c_rho, 1e-12, c_rho <= 1e-12, "|c(rho) - 1|");
  double sym = 0.0;
  PlotSeries plot{"c_estimate", {"xi", "ratio"}, {}};
  double lo = kInfinity, hi = 0.0;
  for (double xi : logspace(1e-2, 1e2, 401)) {
    const double a = std::abs(c_function(d, Complex(0.0, xi)));
    const double b = std::abs(c_function(d, Complex(0.0, -xi)));
    sym = std::max(sym, std::abs(a - b) / a);
    const double ratio = inverse_c_squared(d, xi) / (xi * xi * std::pow(1.0 + xi, beta - 2.0));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    plot.rows.push_back({xi, ratio});
  }
  rep.add_check("conjugate_symmetry", sym, 1e-12, sym <= 1e-12, "max ||c(i xi)| - |c(-i xi)|| / |c(i xi)|");
  rep.add_parameter("L", lo);
  rep.add_parameter("U", hi);
  rep.add_check("estimate_lower", lo, 0.0, std::isfinite(lo) && lo > 0.0,
                "inf of |c(i xi)|^{-2} / (xi^2 (1+xi)^{beta-2}) over [1e-2, 1e2]");
  rep.add_check("estimate_upper", hi, kInfinity, std::isfinite(hi),
                "sup of |c(i xi)|^{-2} / (xi^2 (1+xi)^{beta-2}) over [1e-2, 1e2]");
  rep.add_row("estimate_U_over_L", hi, lo);
  rep.bound = kInfinity;
  return finish(std::move(rep), {plot});
}

SuiteOutput check_closed_forms() {
  auto rep = new_report("closed_forms", nullptr);
  rep.datum = "rank_one(m_alpha=2, m_2alpha=0)";
  const RootDatum d = RootDatum::rank_one(2.0, 0.0);
  std::vector<double> t;
  for (int i = 1; i <= 100; ++i) t.push_back(0.05 * i);
  double curved = 0.0;
  for (double xi : {0.5, 2.0, 5.0}) {
    const auto v = phi_sweep(d, Complex(0.0, xi), t);
    for (std::size_t i = 0; i < t.size(); ++i)
      curved = std::max(curved, std::abs(v[i] - std::sin(xi * t[i]) / (xi * std::sinh(t[i]))));
  }
  rep.add_row("curved_m20", curved, 1e-9, "max |phi_{i xi}(t) - sin(xi t)/(xi sinh t)|");
  double flat = 0.0;
  for (double xi : {0.5, 3.0, 10.0})
    for (double s : t) flat = std::max(flat, std::abs(flat_psi(d, xi, s) - std::sin(xi * s) / (xi * s)));
  rep.add_row("flat_m20", flat, 1e-12, "max |psi(xi, t) - sin(xi t)/(xi t)|");
  double half = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = 0.05 * i;
    half = std::max(half, std::abs(bessel_j(0.5, x) - std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x)));
  }
  rep.add_row("bessel_half", half, 1e-10, "max |J_{1/2}(x) - sqrt(2/(pi x)) sin x| on (0, 50]");
  rep.add_note("rows", "lhs is the observed error, rhs the tolerance");
  rep.bound = 1.0;
  return finish(std::move(rep));
}

SuiteOutput check_flat_limit(Workspace& ws, double xi, const std::vector<double>& eps, double t_max,
                             double tolerance_eps, double tolerance) {
  require_rank_one(ws, "flat_limit");
  require_range(!eps.empty(), "flat_limit: eps list is empty");
  for (double e : eps) require_range(e > 0.0 && e <= 1.0, "flat_limit: eps must lie in (0, 1]");
  require_range(t_max > 0.0, "flat_limit: t_max must be positive");
  auto rep = new_report("flat_limit", &ws);
  const RootDatum& d = ws.datum();
  std::vector<double> t;
  for (int i = 0; i <= 200; ++i) t.push_back(t_max * i / 200.0);
  PlotSeries plot{"flat_limit_error", {"t"}, {}};
  for (double s : t) plot.rows.push_back({s});
  std::vector<double> errs;
  for (double e : eps) {
    plot.columns.push_back(tag("eps", e));
    double worst = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double err = std::abs(eps_contraction(d, e, xi, t[i]) - flat_psi(d, xi, t[i]));
      plot.rows[i].push_back(err);
      worst = std::max(worst, err);
    }
    errs.push_back(worst);
    const bool target = e == tolerance_eps;
    Row r{tag("eps", e), worst, target ? tolerance : 1.0, target, target ? "tolerance row" : "recorded"};
    rep.add_row(r.id, r.lhs, r.rhs, r.note).included = r.included;
  }
  double rise = -kInfinity;
  for (std::size_t k = 1; k < errs.size(); ++k) {
    rise = std::max(rise, errs[k] - errs[k - 1]);
    if (errs[k] > 0.0 && errs[k - 1] > 0.0)
      rep.add_parameter("rate_" + tag("eps", eps[k]), std::log(errs[k - 1] / errs[k]) / std::log(eps[k - 1] / eps[k]));
  }
  if (errs.size() > 1)
    rep.add_check("monotone_in_eps", rise, 1e-9, rise <= 1e-9, "max increase of the error along the eps list");
  const double p1 = std::abs(eps_contraction(d, 0.1, 1.0, 1.0) - flat_psi(d, 1.0, 1.0));
  const double p2 = std::abs(eps_contraction(d, 0.02, 1.0, 1.0) - flat_psi(d, 1.0, 1.0));
  rep.add_check("pointwise_probe", p2, p1, p2 < p1, "error at (xi, x) = (1, 1): eps = 0.02 against eps = 0.1");
  rep.add_parameter("xi", xi);
  rep.add_parameter("t_max", t_max);
  rep.bound = 1.0;
  return finish(std::move(rep), {plot});
}

SuiteOutput check_lorentz(std::uint64_t seed, int count, Workspace* smooth_inputs, const Family& family) {
  require_range(count > 0, "lorentz: count must be positive");
  auto rep = new_report("lorentz", smooth_inputs);
  std::vector<StepFunction> fs;
  for (int k = 0; k < count; ++k) fs.push_back(random_step_function(seed, static_cast<std::size_t>(k)));
  const double slack = 1.0 + 1e-12;
  for (double p : {1.5, 2.0, 3.0}) {
    double err = 0.0, mono = 0.0, weak = 0.0;
    for (const auto& f : fs) {
      const double lp = step_lp_norm(f, p);
      err = std::max(err, std::abs(lorentz_norm(f, p, p) - lp) / lp);
      mono = std::max(mono, lorentz_norm(f, p, 2.0) / lorentz_norm(f, p, 1.0));
      const double w = lorentz_norm(f, p, kInfinity);
      for (double q : {1.0, 2.0, p}) weak = std::max(weak, w / lorentz_norm(f, p, q));
    }
    rep.add_row(tag("lpp", p), err, 1e-10, "max relative | ||f||*_{p,p} - ||f||_p |");
    rep.add_row(tag("monotone_q", p), mono, slack, "max ||f||*_{p,2} / ||f||*_{p,1}");
    rep.add_row(tag("weak_dominated", p), weak, slack, "max ||f||*_{p,inf} / ||f||*_{p,q}, q in {1, 2, p}");
  }
  for (double p : {1.0, 2.0, 3.5}) {
    double err = 0.0;
    for (const auto& f : fs) {
      const double direct = std::pow(step_lp_norm(f, p), p);
      err = std::max(err, std::abs(rearrangement(f).integral_power(p) - direct) / direct);
    }
    rep.add_row(tag("equimeasurable", p), err, 1e-10, "max relative |int (f*)^p dt - int |f|^p|");
  }
  // a cyclic shift of the cells leaves the profile unchanged
  double perm = 0.0;
  for (const auto& f : fs) {
    StepFunction g = f;
    std::rotate(g.values.begin(), g.values.begin() + 3, g.values.end());
    std::rotate(g.masses.begin(), g.masses.begin() + 3, g.masses.end());
    const auto a = rearrangement(f), b = rearrangement(g);
    if (a.values != b.values) perm = std::max(perm, 1.0);
    for (std::size_t j = 0; j < a.breakpoints.size() && j < b.breakpoints.size(); ++j)
      perm = std::max(perm, std::abs(a.breakpoints[j] - b.breakpoints[j]) / a.total_mass());
  }
  rep.add_row("permutation_invariance", perm, 1e-12, "max relative breakpoint change under a cell rotation");
  if (smooth_inputs) {
    Workspace& ws = *smooth_inputs;
    Level& L = ws.level(1);
    double err = 0.0;
    for (const auto& spec : family) {
      const auto& f = ws.function(L, spec);
      for (double p : {1.0, 2.0, 3.5}) {
        const double direct = std::pow(lp_norm(f, p), p);
        err = std::max(err, std::abs(rearrangement(f).integral_power(p) - direct) / direct);
      }
    }
    rep.add_row("equimeasurable_smooth", err, 1e-6, "family on the mu quadrature, p in {1, 2, 3.5}");
  }
  rep.add_parameter("count", count);
  rep.add_parameter("seed", static_cast<double>(seed));
  rep.add_note("rows", "lhs is the observed value, rhs its bound");
  rep.bound = 1.0;
  return finish(std::move(rep));
}

SuiteOutput check_oneil(std::uint64_t seed, int count, const std::vector<double>& qs) {
  require_range(count > 0, "oneil: count must be positive");
  auto rep = new_report("oneil", nullptr);
  rep.datum = "random step functions";
  for (std::size_t iq = 0; iq < qs.size(); ++iq) {
    const double q = qs[iq];
    std::vector<StepFunction> gs, hs;
    for (int k = 0; k < count; ++k) {
      gs.push_back(random_step_function(seed + 7919 * (iq + 1), static_cast<std::size_t>(k)));
      hs.push_back(random_step_values(seed + 7919 * (iq + 1), static_cast<std::size_t>(k), gs.back().masses));
    }
    const auto sub = oneil_check(gs, hs, q);
    for (const auto& row : sub.rows) rep.add_row(tag("q", q) + "|" + row.function_id, row.lhs, row.rhs);
    rep.add_parameter(tag("violations_q", q), sub.parameter("violations"));
    rep.add_parameter(tag("violations_at_reference_constant_q", q), sub.parameter("violations_at_reference_constant"));
    rep.add_parameter(tag("reference_constant_q", q), sub.parameter("reference_constant"));
    rep.add_parameter(tag("max_ratio_q", q), sub.max_ratio);
  }
  rep.add_parameter("count", count);
  rep.add_parameter("seed", static_cast<double>(seed));
  rep.bound = 1.0 + 1e-9;
  return finish(std::move(rep));
}

SuiteOutput check_hausdorff_young(Workspace& ws, const std::vector<double>& ps, const Family& family) {
  require_rank_one(ws, "hausdorff_young");
  for (double p : ps) require_range(p > 1.0 && p <= 2.0, "hausdorff_young: p must lie in (1, 2], got " + format_number(p));
  auto rep = new_report("hausdorff_young", &ws);
  const double rho = ws.datum().rho();
  auto compute = [&](Level& L) {
    Rows rows;
    const auto hats = ws.transforms(L, family, 0.0);
    for (double p : ps) {
      const double q = conjugate(p);
      for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = guarded(ws, L, family[i], 2.0 * rho / p, "f in L^p(mu)");
        rows.push_back(Row{tag("p", p) + "|" + f.id, spectral_norm(*hats[i], *L.nu, q, nullptr), lp_norm(f, p)});
      }
    }
    return rows;
  };
  const Rows base = compute(ws.level(1));
  add_rows(rep, base);
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base, compute(ws.level(refine)), 0.02, refine);
  add_degeneration(rep, "plancherel_degeneration", base, tag("p", 2.0));
  rep.add_note("measure", "d nu = kappa |c(i xi)|^{-2} d xi");
  rep.add_note("bound", "Riesz-Thorin between |F f| <= ||f||_1 and Plancherel gives constant 1");
  rep.bound = 1.0 + 1e-3;
  return finish(std::move(rep));
}

SuiteOutput check_hausdorff_young_shifted(Workspace& ws, double p, double eta, const Family& family) {
  require_rank_one(ws, "hausdorff_young_shifted");
  require_range(p > 1.0 && p <= 2.0, "hausdorff_young_shifted: p must lie in (1, 2]");
  validate_tube(ws.datum(), p, eta);
  auto rep = new_report("hausdorff_young_shifted", &ws);
  const double rho = ws.datum().rho();
  const double q = conjugate(p);
  double decay = 0.0;
  auto compute = [&](Level& L, bool record) {
    Rows rows;
    const auto hats = ws.transforms(L, family, eta);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& f = guarded(ws, L, family[i], 2.0 * rho / p, "f in L^p(mu)");
      const double norm = lp_norm(f, p);
      rows.push_back(Row{"Lq|" + f.id, spectral_norm(*hats[i], *L.nu, q, nullptr), norm});
      const double sup = sup_abs(*hats[i]);
      rows.push_back(Row{"sup|" + f.id, sup, norm});
      if (record && sup > 0.0) decay = std::max(decay, std::abs(hats[i]->values.back()) / sup);
    }
    return rows;
  };
  const Rows base = compute(ws.level(1), true);
  add_rows(rep, base);
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base, compute(ws.level(refine), false), 0.02, refine);
  rep.add_check("spectral_decay", decay, 1e-3, decay <= 1e-3, "|F f(i Lambda_max + eta)| / max_xi |F f(i xi + eta)|");
  rep.add_parameter("p", p);
  rep.add_parameter("q", q);
  rep.add_parameter("eta", eta);
  rep.add_parameter("tube_bound", tube_bound(ws.datum(), p));
  rep.add_note("measure", "d nu = kappa |c(i xi)|^{-2} d xi");
  rep.bound = kInfinity;
  return finish(std::move(rep));
}

SuiteOutput check_hl_weighted(Workspace& ws, const std::vector<double>& ps, const WeightSpec& w, const Family& family) {
  require_rank_one(ws, "hl_weighted");
  w.validate(ws.datum());
  for (double p : ps) require_range(p > 1.0 && p < 2.0, "hl_weighted: p must lie in (1, 2), got " + format_number(p));
  auto rep = new_report("hl_weighted", &ws);
  const RootDatum& d = ws.datum();
  const double n = d.rank();
  const double rho = d.rho();
  auto psi = [&](double xi) { return std::pow(xi, 2.0 * (w.k + n) + w.a) * std::pow(1.0 + xi, w.b); };

  struct Result {
    Rows rows;
    double strong = 0.0, strong_bound = 0.0, weak = 0.0;
  };
  auto compute = [&](Level& L) {
    Result res;
    const auto hats = ws.transforms(L, family, 0.0);
    const auto& grid = *L.spectral;
    const auto bar = spectral_power(grid, [&](double xi) { return std::pow(xi, w.a) * std::pow(1.0 + xi, w.b) / kWeylOrder; });
    double psi_max = 0.0;
    for (double xi : grid.nodes()) psi_max = std::max(psi_max, psi(xi));
    res.strong_bound = std::sqrt(psi_max / kWeylOrder) * (1.0 + 1e-6);
    for (double p : ps) {
      const auto weight = spectral_power(grid, [&](double xi) {
        return std::pow(xi, (w.k + n) * p + w.a) * std::pow(1.0 + xi, w.b) / kWeylOrder;
      });
      for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = guarded(ws, L, family[i], 2.0 * rho / p, "f in L^p(mu)");
        res.rows.push_back(Row{tag("p", p) + "|" + f.id, spectral_norm(*hats[i], *L.nu, p, &weight), lp_norm(f, p)});
      }
    }
    std::vector<std::vector<double>> tf;
    std::vector<double> l1;
    const auto t2 = spectral_power(grid, [&](double xi) { return std::pow(xi, 2.0 * (w.k + n)); });
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& f = ws.function(L, family[i]);
      std::vector<double> v(grid.size());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::pow(grid.nodes()[j], w.k + n) * std::abs(hats[i]->values[j]);
      tf.push_back(std::move(v));
      l1.push_back(lp_norm(f, 1.0));
      // || T f ||_{L^2(nu bar)} with T f = xi^{k+n} |F f|
      std::vector<double> weight(grid.size());
      for (std::size_t j = 0; j < weight.size(); ++j) weight[j] = t2[j] * bar[j];
      res.strong = std::max(res.strong, spectral_norm(*hats[i], *L.nu, 2.0, &weight) / lp_norm(f, 2.0));
    }
    res.weak = weak_type_constant(step_outputs(tf, *L.nu, bar), l1, 1.0);
    return res;
  };

  const Result base = compute(ws.level(1));
  add_rows(rep, base.rows);
  double lo = kInfinity, hi = 0.0;
  PlotSeries plot{"hl_weighted_psi", {"xi", "psi"}, {}};
  for (double xi : logspace(1e-2, 1e2, 401)) {
    const double v = psi(xi);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    plot.rows.push_back({xi, v});
  }
  rep.add_parameter("k", w.k);
  rep.add_parameter("a", w.a);
  rep.add_parameter("b", w.b);
  rep.add_parameter("n", n);
  rep.add_parameter("psi_L", lo);
  rep.add_parameter("psi_U", hi);
  rep.add_parameter("condition_i_satisfied", w.condition_i(d) ? 1.0 : 0.0);
  rep.add_check("psi_lower", lo, 0.0, std::isfinite(lo) && lo > 0.0,
                "inf of xi^{2(k+n)+a} (1+xi)^b over [1e-2, 1e2]");
  rep.add_check("psi_upper", hi, kInfinity, std::isfinite(hi), "sup of xi^{2(k+n)+a} (1+xi)^b over [1e-2, 1e2]");
  rep.add_check("strong_22", base.strong, base.strong_bound, base.strong <= base.strong_bound,
                "max ||xi^{k+n} F f||_{L2(nu bar)} / ||f||_2 against sqrt(sup psi / |W|)");
  rep.add_check("weak_11_finite", base.weak, kInfinity, std::isfinite(base.weak) && base.weak > 0.0,
                "max_f sup_t t nu_bar({xi^{k+n} |F f| > t}) / ||f||_1");
  rep.add_parameter("weak_11_constant", base.weak);
  const int refine = ws.settings().refine;
  if (refine > 1) {
    const Result fine = compute(ws.level(refine));
    add_refinement_checks(rep, base.rows, fine.rows, 0.02, refine);
    add_scalar_refinement(rep, "weak_11_refinement", base.weak, fine.weak, 0.2, refine);
  }
  rep.add_note("weyl_factor", "1/|W| with |W| = 2 enters d nu_bar and the final integral");
  rep.add_note("condition_i", "a + b <= (2/3)(n - beta) is recorded only; the proof-side conditions gate execution");
  rep.add_note("psi", "psi = xi^{2(k+n)+a}(1+xi)^b is bounded above on (0, inf); its lower bound holds on compact ranges");
  rep.bound = kInfinity;
  return finish(std::move(rep), {plot});
}

SuiteOutput check_hl_young(Workspace& ws, const std::vector<double>& qs, const Family& family) {
  require_rank_one(ws, "hl_young");
  for (double q : qs) require_range(q > 2.0 && std::isfinite(q), "hl_young: q must lie in (2, inf)");
  auto rep = new_report("hl_young", &ws);
  const RootDatum& d = ws.datum();
  const double rho = d.rho();
  auto compute = [&](Level& L) {
    Rows rows;
    const auto hats = ws.transforms(L, family, 0.0);
    for (double q : qs) {
      std::vector<double> weight;
      for (double x : L.x->nodes()) weight.push_back(std::pow(std::cosh(x) * density_J(d, x), q - 2.0));
      for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = ws.function(L, family[i]);
        Row r{tag("q", q) + "|" + f.id, spectral_norm(*hats[i], *L.nu, q, nullptr, 1.0 / kWeylOrder),
              weighted_lp_norm(f, weight, q)};
        try {
          require_decay(f, ((2.0 * rho + 1.0) * (q - 2.0) + 2.0 * rho) / q, "f in L^(q) with psi_h");
        } catch (const ConfigError& e) {
          r.included = false;
          r.note = e.what();
        }
        rows.push_back(r);
      }
    }
    return rows;
  };
  const Rows base = compute(ws.level(1));
  add_rows(rep, base);
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base, compute(ws.level(refine)), 0.02, refine);
  const auto [sup, inf] = young_sublevel_ratio(d, true, 1e-3, 1e3);
  rep.add_parameter("young_psi_h_sup", sup);
  rep.add_parameter("young_psi_h_inf", inf);
  rep.add_check("young_psi_h", sup, kInfinity, std::isfinite(sup) && sup > 0.0,
                "sup over t in [1e-3, 1e3] of mu({cosh(x) J(x) <= t}) / t");
  rep.add_note("weyl_factor", "lhs carries 1/|W| with |W| = 2");
  rep.bound = kInfinity;
  return finish(std::move(rep));
}

SuiteOutput check_hl_ver3_i(Workspace& ws, double q, const std::vector<double>& ps, double eta, const Family& family) {
  require_rank_one(ws, "hl_ver3_i");
  require_range(q > 1.0 && q <= 2.0, "hl_ver3_i: q must lie in (1, 2]");
  const RootDatum& d = ws.datum();
  const double qp = conjugate(q);
  std::vector<double> rs;
  for (double p : ps) {
    require_range(p > 1.0 && p <= q, "hl_ver3_i: p must lie in (1, q], got " + format_number(p));
    const double inv_r = 1.0 - (qp - 1.0) / conjugate(p);
    require_range(inv_r > 0.0, "hl_ver3_i: r <= 0 for p = " + format_number(p));
    validate_tube(d, p, eta);
    rs.push_back(1.0 / inv_r);
  }
  auto rep = new_report("hl_ver3_i", &ws);
  const double n = d.rank();
  const double rho = d.rho();
  auto base_weight = [&](double xi) { return xi * inverse_c_squared(d, xi); };

  struct Result {
    Rows rows;
    double strong = 0.0, weak = 0.0;
  };
  auto compute = [&](Level& L) {
    Result res;
    const auto hats = ws.transforms(L, family, eta);
    const auto& grid = *L.spectral;
    const auto bw = spectral_power(grid, base_weight);
    for (std::size_t ip = 0; ip < ps.size(); ++ip) {
      const double p = ps[ip], r = rs[ip];
      const double e = r / conjugate(p) - 1.0;
      std::vector<double> weight(bw.size());
      for (std::size_t j = 0; j < bw.size(); ++j) weight[j] = std::pow(bw[j], e);
      for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = guarded(ws, L, family[i], 2.0 * rho / p, "f in L^p(mu)");
        res.rows.push_back(Row{tag("p", p) + "|" + f.id, spectral_norm(*hats[i], *L.nu, r, &weight), lp_norm(f, p)});
      }
    }
    // auxiliary T f = |F f(i xi + eta)| (xi |c|^{-2})^{nq/q'} on nu_bar = nu (xi |c|^{-2})^{-nq}
    std::vector<double> bar(bw.size());
    for (std::size_t j = 0; j < bw.size(); ++j) bar[j] = std::pow(bw[j], -n * q);
    std::vector<std::vector<double>> tf;
    std::vector<double> l1;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& f = ws.function(L, family[i]);
      res.strong = std::max(res.strong, spectral_norm(*hats[i], *L.nu, qp, nullptr) / lp_norm(f, q));
      std::vector<double> v(bw.size());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::abs(hats[i]->values[j]) * std::pow(bw[j], n * q / qp);
      tf.push_back(std::move(v));
      l1.push_back(lp_norm(f, 1.0));
    }
    res.weak = weak_type_constant(step_outputs(tf, *L.nu, bar), l1, 1.0);
    return res;
  };
  const Result base = compute(ws.level(1));
  add_rows(rep, base.rows);
  for (std::size_t ip = 0; ip < ps.size(); ++ip) rep.add_parameter(tag("r_p", ps[ip]), rs[ip]);
  rep.add_parameter("q", q);
  rep.add_parameter("eta", eta);
  rep.add_check("aux_strong_q_qprime", base.strong, kInfinity, std::isfinite(base.strong),
                "max ||T f||_{L^{q'}(nu_bar)} / ||f||_q");
  if (q == 2.0 && eta == 0.0) {
    const double dev = std::abs(base.strong - 1.0);
    rep.add_check("aux_plancherel_degeneration", dev, 1e-3, dev <= 1e-3, "q = 2, eta = 0: strong ratio is Plancherel");
  }
  rep.add_check("aux_weak_11_finite", base.weak, kInfinity, std::isfinite(base.weak) && base.weak > 0.0,
                "max_f sup_t t nu_bar({T f > t}) / ||f||_1");
  rep.add_parameter("aux_weak_11_constant", base.weak);
  const int refine = ws.settings().refine;
  if (refine > 1) {
    const Result fine = compute(ws.level(refine));
    add_refinement_checks(rep, base.rows, fine.rows, 0.02, refine);
    add_scalar_refinement(rep, "aux_weak_11_refinement", base.weak, fine.weak, 0.2, refine);
  }
  if (q == 2.0 && eta == 0.0) add_degeneration(rep, "plancherel_degeneration", base.rows, tag("p", 2.0));
  // G(s) = s^3 (1+s)^{beta-2}, G'(s) = s^2 (1+s)^{beta-3} (3 + (beta+1) s)
  const double beta = d.beta();
  double lo = kInfinity, hi = 0.0;
  PlotSeries plot{"g_trick", {"xi", "ratio"}, {}};
  for (double xi : logspace(0.1, 50.0, 200)) {
    const double g = xi * xi * std::pow(1.0 + xi, beta - 3.0) * (3.0 + (beta + 1.0) * xi);
    const double v = g / inverse_c_squared(d, xi);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    plot.rows.push_back({xi, v});
  }
  rep.add_parameter("g_trick_L", lo);
  rep.add_parameter("g_trick_U", hi);
  rep.add_check("g_trick", hi / lo, kInfinity, std::isfinite(hi) && lo > 0.0,
                "G'(xi) / |c(i xi)|^{-2} within [L, U] on [0.1, 50]");
  rep.add_note("weights", "(xi |c|^{-2}) uses the raw c-function; d nu = kappa |c|^{-2} d xi");
  rep.bound = kInfinity;
  return finish(std::move(rep), {plot});
}

SuiteOutput check_hl_ver3_ii(Workspace& ws, double q, const std::vector<double>& ps, double eta, const Family& family) {
  require_rank_one(ws, "hl_ver3_ii");
  require_range(q >= 2.0 && std::isfinite(q), "hl_ver3_ii: q must lie in [2, inf)");
  for (double p : ps) require_range(p >= q && std::isfinite(p), "hl_ver3_ii: p must lie in [q, inf), got " + format_number(p));
  if (eta != 0.0)
    throw ConfigError("hl_ver3_ii: only eta = 0 is run; the tube interior is empty for p >= 2 (got eta = " +
                      format_number(eta) + ")");
  auto rep = new_report("hl_ver3_ii", &ws);
  const RootDatum& d = ws.datum();
  const double rho = d.rho();
  struct Result {
    Rows rows;
    double sup_ratio = 0.0, intermediate = 0.0;
  };
  auto compute = [&](Level& L) {
    Result res;
    const auto hats = ws.transforms(L, family, 0.0);
    for (double p : ps) {
      std::vector<double> weight;
      for (double x : L.x->nodes()) weight.push_back(std::pow(density_J(d, x), p - 2.0));
      for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = guarded(ws, L, family[i], 2.0 * rho * (p - 1.0) / p, "f in L^(p)");
        res.rows.push_back(Row{tag("p", p) + "|" + f.id, spectral_norm(*hats[i], *L.nu, p, nullptr),
                               weighted_lp_norm(f, weight, p)});
      }
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& f = ws.function(L, family[i]);
      res.sup_ratio = std::max(res.sup_ratio, sup_abs(*hats[i]) / lp_norm(f, 1.0));
      res.intermediate =
          std::max(res.intermediate, spectral_norm(*hats[i], *L.nu, q, nullptr) / lp_norm(f, conjugate(q)));
    }
    return res;
  };
  const Result base = compute(ws.level(1));
  add_rows(rep, base.rows);
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base.rows, compute(ws.level(refine)).rows, 0.02, refine);
  if (q == 2.0) add_degeneration(rep, "plancherel_degeneration", base.rows, tag("p", 2.0));
  rep.add_check("interpolate_1", base.sup_ratio, 1.0 + 1e-9, base.sup_ratio <= 1.0 + 1e-9, "max ||F f||_inf / ||f||_1");
  rep.add_check("intermediate", base.intermediate, kInfinity, std::isfinite(base.intermediate),
                "max ||F f||_{L^q(nu)} / ||f||_{q'}");
  const auto [sup, inf] = young_sublevel_ratio(d, false, 1e-3, 1e3);
  rep.add_parameter("young_J_sup", sup);
  rep.add_parameter("young_J_inf", inf);
  rep.add_check("young_J", sup, kInfinity, std::isfinite(sup) && sup > 0.0,
                "sup over t in [1e-3, 1e3] of mu({J <= t}) / t");
  rep.add_parameter("q", q);
  rep.add_parameter("eta", 0.0);
  rep.add_parameter("hypothesis_vacuous", 1.0);
  rep.add_note("eta", "the tube C(eps_p rho) has empty interior for p >= 2; run at eta = 0 only");
  rep.bound = kInfinity;
  return finish(std::move(rep));
}

SuiteOutput check_flat_plancherel(Workspace& ws, const Family& family) {
  auto rep = new_report("flat_plancherel", &ws);
  rep.datum = flat_describe(ws.datum());
  auto compute = [&](Level& L) {
    Rows rows;
    const FlatData fd = flat_data(ws, L, family);
    const auto specs = resolved(ws, family);
    for (std::size_t i = 0; i < family.size(); ++i)
      rows.push_back(Row{specs[i].id(), flat_spectral(fd, i, 2.0, 0.0, 0.0), flat_spatial(fd, i, 2.0, 0.0, 0.0)});
    return rows;
  };
  const Rows base = compute(ws.level(1));
  add_rows(rep, base);
  double worst = 0.0;
  for (const auto& r : base) worst = std::max(worst, std::abs(ratio_of(r) - 1.0));
  rep.add_check("isometry", worst, 1e-3, worst <= 1e-3, "max |ratio - 1| over the family");
  const double k0 = ws.flat_datum().flat_kappa();
  const double closed = flat_kappa_closed_form(ws.datum());
  rep.add_parameter("kappa0", k0);
  rep.add_parameter("kappa0_closed_form", closed);
  const double dk = std::abs(k0 / closed - 1.0);
  rep.add_check("kappa0_vs_closed_form", dk, 1e-3, dk <= 1e-3, "calibrated kappa0 against prod 1/(2^{2 nu_i} Gamma(nu_i+1)^2)");
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base, compute(ws.level(refine)), 0.02, refine);
  rep.add_note("inputs", "tensor products f(x) = prod_i g(x_i) on the positive orthant");
  rep.bound = 1.0 + 1e-3;
  return finish(std::move(rep));
}

SuiteOutput check_flat_hl(Workspace& ws, const std::vector<double>& ps, const Family& family) {
  for (double p : ps) require_range(p > 1.0 && p <= 2.0, "flat_hl: p must lie in (1, 2], got " + format_number(p));
  auto rep = new_report("flat_hl", &ws);
  rep.datum = flat_describe(ws.datum());
  const double n = static_cast<double>(flat_axes(ws.datum()).size());
  const double rho0 = ws.datum().flat_rho();
  auto compute = [&](Level& L) {
    Rows rows;
    const FlatData fd = flat_data(ws, L, family);
    const auto specs = resolved(ws, family);
    for (double p : ps) {
      const double s = 2.0 * (rho0 + 0.5 * n) * (p - 2.0);
      for (std::size_t i = 0; i < family.size(); ++i)
        rows.push_back(Row{tag("p", p) + "|" + specs[i].id(), flat_spectral(fd, i, p, 0.0, s),
                           flat_spatial(fd, i, p, 0.0, 0.0)});
    }
    return rows;
  };
  const Rows base = compute(ws.level(1));
  add_rows(rep, base);
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base, compute(ws.level(refine)), 0.02, refine);
  add_degeneration(rep, "plancherel_degeneration", base, tag("p", 2.0));
  rep.add_parameter("rho0", rho0);
  rep.add_parameter("n", n);
  rep.add_note("d", "the exponent 2(rho + d/2)(p - 2) is evaluated with d = n, rho = rho0 = sum(m)/2");
  rep.bound = kInfinity;
  return finish(std::move(rep));
}

SuiteOutput check_flat_rs(Workspace& ws, double q_i, const std::vector<double>& ps_i, double q_ii,
                          const std::vector<double>& ps_ii, const Family& family) {
  require_range(q_i > 1.0 && q_i <= 2.0, "flat_rs: part (i) needs 1 < q <= 2");
  require_range(q_ii >= 2.0 && std::isfinite(q_ii), "flat_rs: part (ii) needs 2 <= q < inf");
  std::vector<double> rs;
  for (double p : ps_i) {
    require_range(p > 1.0 && p <= q_i, "flat_rs: part (i) needs 1 < p <= q, got p = " + format_number(p));
    const double inv_r = 1.0 - (conjugate(q_i) - 1.0) / conjugate(p);
    require_range(inv_r > 0.0, "flat_rs: r <= 0 for p = " + format_number(p));
    rs.push_back(1.0 / inv_r);
  }
  for (double p : ps_ii)
    require_range(p >= q_ii && std::isfinite(p), "flat_rs: part (ii) needs q <= p < inf, got p = " + format_number(p));
  auto rep = new_report("flat_rs", &ws);
  rep.datum = flat_describe(ws.datum());
  const double n = static_cast<double>(flat_axes(ws.datum()).size());
  const double rho0 = ws.datum().flat_rho();
  const double k = 2.0 * rho0 + n;
  auto compute = [&](Level& L) {
    Rows rows;
    const FlatData fd = flat_data(ws, L, family);
    const auto specs = resolved(ws, family);
    for (std::size_t ip = 0; ip < ps_i.size(); ++ip) {
      const double p = ps_i[ip], r = rs[ip];
      const double e = r / conjugate(p) - 1.0;  // (|xi| omega)^e
      for (std::size_t i = 0; i < family.size(); ++i)
        rows.push_back(Row{"i:" + tag("p", p) + "|" + specs[i].id(), flat_spectral(fd, i, r, e, e),
                           flat_spatial(fd, i, p, 0.0, 0.0)});
    }
    for (double p : ps_ii) {
      for (std::size_t i = 0; i < family.size(); ++i) {
        const double lhs = flat_spectral(fd, i, p, 0.0, 0.0);
        rows.push_back(Row{"ii:" + tag("p", p) + "|" + specs[i].id(), lhs, flat_spatial(fd, i, p, p - 2.0, 0.0)});
        rows.push_back(Row{"remark:" + tag("p", p) + "|" + specs[i].id(), lhs, flat_spatial(fd, i, p, 0.0, k * (p - 2.0))});
      }
    }
    return rows;
  };
  const Rows base = compute(ws.level(1));
  add_rows(rep, base);
  const int refine = ws.settings().refine;
  if (refine > 1) add_refinement_checks(rep, base, compute(ws.level(refine)), 0.02, refine);
  if (q_i == 2.0) add_degeneration(rep, "plancherel_degeneration_i", base, "i:" + tag("p", 2.0));
  add_degeneration(rep, "plancherel_degeneration_ii", base, "ii:" + tag("p", 2.0));
  add_degeneration(rep, "plancherel_degeneration_remark", base, "remark:" + tag("p", 2.0));

  // sublevel sweep of |x|^k' : constant ratio exactly at k' = 2 rho0 + n
  PlotSeries plot{"young_exponent_sweep", {"t"}, {}};
  const auto ts = logspace(1e-3, 1e3, 61);
  for (double t : ts) plot.rows.push_back({t});
  const double ks[] = {k - 0.5, k, k + 0.5};
  for (double kk : ks) {
    plot.columns.push_back(tag("k", kk));
    double sup = 0.0, inf = kInfinity;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double v = flat_sublevel_measure(ws.datum(), kk, ts[i]) / ts[i];
      plot.rows[i].push_back(v);
      sup = std::max(sup, v);
      inf = std::min(inf, v);
    }
    const double spread = sup / inf;
    if (kk == k) {
      rep.add_parameter("young_constant", sup);
      rep.add_check("young_exponent_exact", spread - 1.0, 1e-9, std::isfinite(sup) && spread - 1.0 <= 1e-9,
                    "mu0(B(t^{1/k}))/t is constant in t at k = 2 rho0 + n");
    } else {
      // a power t^s with s != 0 is unbounded on (0, inf); read s off both halves of the sweep
      const std::size_t mid = ts.size() / 2, last = ts.size() - 1;
      auto slope = [&](std::size_t a, std::size_t b) {
        return std::log(plot.rows[b].back() / plot.rows[a].back()) / std::log(ts[b] / ts[a]);
      };
      const double s_lo = slope(0, mid), s_hi = slope(mid, last);
      const double s = std::min(std::abs(s_lo), std::abs(s_hi));
      const bool power = std::abs(s_lo - s_hi) <= 1e-9 * std::max(1.0, std::abs(s_lo));
      rep.add_parameter("young_spread_" + tag("k", kk), spread);
      rep.add_parameter("young_slope_" + tag("k", kk), s_lo);
      rep.add_check("young_exponent_diverges_" + tag("k", kk), s, 1e-6, power && s > 1e-6,
                    "mu0(B(t^{1/k'}))/t is a nonconstant power of t (sup/inf " + format_number(spread) +
                        " over [1e-3, 1e3]), hence unbounded off k = 2 rho0 + n");
    }
  }
  rep.add_parameter("q_i", q_i);
  rep.add_parameter("q_ii", q_ii);
  rep.add_parameter("k", k);
  for (std::size_t ip = 0; ip < ps_i.size(); ++ip) rep.add_parameter(tag("r_p", ps_i[ip]), rs[ip]);
  rep.add_note("measure", "d nu0 = kappa0 omega_m(xi) d xi in every part");
  rep.add_note("remark", "remark rows use the Young function |x|^k with k = 2 rho0 + n, n = number of axes");
  rep.bound = kInfinity;
  return finish(std::move(rep), {plot});
}

}  // namespace hoft
