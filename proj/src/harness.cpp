#include "hoft/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hoft/errors.hpp"

namespace hoft {

GridOptions HarnessSettings::default_spectral_grid() {
  GridOptions g;
  g.x_max = 60.0;
  g.order = 32;
  return g;
}

TestFunctionSpec HarnessSettings::default_calibration() {
  TestFunctionSpec s;
  s.family = TestFamily::GaussianBump;
  s.center = 0.75;
  s.width = 0.8;
  return s;
}

WeightSpec WeightSpec::natural(const RootDatum& datum) {
  const double n = datum.rank();
  WeightSpec w;
  w.k = datum.beta();
  w.a = 0.0;
  w.b = -(w.k + n) - datum.beta() - n - w.a;
  return w;
}

std::vector<std::string> WeightSpec::failures(const RootDatum& datum) const {
  const double n = datum.rank();
  const double beta = datum.beta();
  std::vector<std::string> out;
  auto fmt = [](double v) { return format_number(v); };
  if (!(k >= 0.0)) out.push_back("k >= 0 (k = " + fmt(k) + ")");
  if (!(beta + n > 0.0)) out.push_back("beta + n > 0");
  const double lhs = a + b + beta + n;
  if (std::abs(lhs + (k + n)) > 1e-12)
    out.push_back("a + b + beta + n = -(k + n) (got " + fmt(lhs) + " vs " + fmt(-(k + n)) + ")");
  if (!(2.0 * (k + n) + a >= 0.0)) out.push_back("2(k + n) + a >= 0 (got " + fmt(2.0 * (k + n) + a) + ")");
  if (!(2.0 * (k + n) + a + b <= 1e-12)) out.push_back("2(k + n) + a + b <= 0 (got " + fmt(2.0 * (k + n) + a + b) + ")");
  return out;
}

bool WeightSpec::condition_i(const RootDatum& datum) const {
  return a + b <= (2.0 / 3.0) * (datum.rank() - datum.beta()) + 1e-12;
}

void WeightSpec::validate(const RootDatum& datum) const {
  const auto bad = failures(datum);
  if (bad.empty()) return;
  std::string msg = "weight spec (k=" + format_number(k) + ", a=" + format_number(a) + ", b=" + format_number(b) +
                    ") fails:";
  for (const auto& s : bad) msg += " [" + s + "]";
  throw ConfigError(msg);
}

Workspace::Workspace(RootDatum datum, HarnessSettings settings)
    : datum_(std::move(datum)), settings_(std::move(settings)) {
  if (datum_.is_rank_one() && !datum_.has_kappa()) {
    auto x = std::make_shared<const RadialGrid>(settings_.x_grid);
    auto spectral = std::make_shared<const RadialGrid>(settings_.spectral_grid);
    const auto f0 = make_test_function(settings_.calibration, mu_measure(datum_, x));
    datum_ = calibrate_kappa(datum_, f0, spectral);
  }
}

const RootDatum& Workspace::flat_datum() {
  std::lock_guard guard(lock_);
  if (!flat_datum_) {
    Level& L = level(1);
    std::vector<SampledFunction> factors;
    if (datum_.is_rank_one()) {
      factors.push_back(axis_function(L, settings_.calibration, datum_.beta()));
    } else {
      for (double m : datum_.multiplicities()) factors.push_back(axis_function(L, settings_.calibration, m));
    }
    flat_datum_ = calibrate_flat_kappa(datum_, factors, L.spectral);
  }
  return *flat_datum_;
}

Level& Workspace::level(int factor) {
  std::lock_guard guard(lock_);
  auto& slot = levels_[factor];
  if (!slot) {
    slot = std::make_unique<Level>();
    slot->factor = factor;
    slot->x = std::make_shared<const RadialGrid>(settings_.x_grid.refined(factor));
    slot->spectral = std::make_shared<const RadialGrid>(settings_.spectral_grid.refined(factor));
    if (datum_.is_rank_one()) {
      slot->mu = mu_measure(datum_, slot->x);
      slot->nu = nu_measure(datum_, slot->spectral);
    }
  }
  return *slot;
}

TestFunctionSpec Workspace::resolve(const TestFunctionSpec& spec) const {
  TestFunctionSpec s = spec;
  if (s.family == TestFamily::CoshPower && s.sigma <= 0.0) {
    const double rho = datum_.is_rank_one() ? datum_.rho() : datum_.flat_rho();
    s.sigma = 2.0 * rho + 2.0;
  }
  return s;
}

const SampledFunction& Workspace::function(Level& L, const TestFunctionSpec& spec) {
  std::lock_guard guard(lock_);
  if (!L.mu) throw ConfigError("suite needs a rank-one datum, got " + datum_.describe());
  const TestFunctionSpec s = resolve(spec);
  const std::string id = s.id();
  auto it = L.functions.find(id);
  if (it == L.functions.end()) it = L.functions.emplace(id, make_test_function(s, L.mu)).first;
  return it->second;
}

std::vector<const SpectralFunction*> Workspace::transforms(Level& L, const std::vector<TestFunctionSpec>& specs,
                                                           double eta) {
  std::lock_guard guard(lock_);
  std::vector<SampledFunction> missing;
  std::vector<std::string> seen;
  for (const auto& spec : specs) {
    const std::string id = resolve(spec).id();
    if (L.hat.count({eta, id}) || std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    seen.push_back(id);
    missing.push_back(function(L, spec));
  }
  if (!missing.empty()) {
    auto computed = ho_transform(datum_, missing, L.spectral, eta);
    for (auto& g : computed) L.hat.emplace(std::make_pair(eta, g.id), std::move(g));
  }
  std::vector<const SpectralFunction*> out;
  for (const auto& spec : specs) out.push_back(&L.hat.at({eta, resolve(spec).id()}));
  return out;
}

MeasurePtr Workspace::axis_measure(Level& L, double m) {
  std::lock_guard guard(lock_);
  auto it = L.axis_measures.find(m);
  if (it == L.axis_measures.end()) it = L.axis_measures.emplace(m, hoft::axis_measure(m, L.x, "mu0_axis")).first;
  return it->second;
}

SampledFunction Workspace::axis_function(Level& L, const TestFunctionSpec& spec, double m) {
  return make_test_function(resolve(spec), axis_measure(L, m));
}

std::vector<const SpectralFunction*> Workspace::axis_transforms(Level& L, const std::vector<TestFunctionSpec>& specs,
                                                                double m) {
  std::lock_guard guard(lock_);
  std::vector<SampledFunction> missing;
  std::vector<std::string> seen;
  for (const auto& spec : specs) {
    const std::string id = resolve(spec).id();
    if (L.flat.count({m, id}) || std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    seen.push_back(id);
    missing.push_back(axis_function(L, spec, m));
  }
  if (!missing.empty()) {
    auto computed = hankel_transform(0.5 * (m - 1.0), missing, L.spectral);
    for (auto& g : computed) L.flat.emplace(std::make_pair(m, g.id), std::move(g));
  }
  std::vector<const SpectralFunction*> out;
  for (const auto& spec : specs) out.push_back(&L.flat.at({m, resolve(spec).id()}));
  return out;
}

GridMetadata Workspace::metadata(int factor) const {
  GridMetadata g;
  const GridOptions x = settings_.x_grid;
  const GridOptions s = settings_.spectral_grid;
  g.x_max = x.x_max;
  g.lambda_max = s.x_max;
  g.order = x.order;
  g.spectral_order = s.order;
  g.panels_per_unit = x.panels_per_unit;
  g.grading_levels = x.grading_levels;
  g.refine_factor = factor;
  g.x_nodes = RadialGrid(x).size();
  g.spectral_nodes = RadialGrid(s).size();
  return g;
}

Workspace& Harness::workspace(const RootDatum& datum, const HarnessSettings& settings) {
  std::lock_guard guard(lock_);
  std::ostringstream key;
  const auto& x = settings.x_grid;
  const auto& s = settings.spectral_grid;
  key << datum.describe() << '|' << x.x_max << ',' << x.order << ',' << x.panels_per_unit << ',' << x.grading_levels
      << ',' << x.grading_order << '|' << s.x_max << ',' << s.order << ',' << s.panels_per_unit << ','
      << s.grading_levels << ',' << s.grading_order << '|' << settings.refine << '|' << settings.calibration.id();
  auto& slot = spaces_[key.str()];
  if (!slot) slot = std::make_unique<Workspace>(datum, settings);
  return *slot;
}

Family default_family() {
  Family f;
  const std::pair<double, double> bumps[] = {{0.0, 0.5}, {0.0, 1.0}, {0.0, 2.0}, {1.5, 0.5}, {1.5, 1.0}};
  for (auto [c, w] : bumps) {
    TestFunctionSpec s;
    s.family = TestFamily::GaussianBump;
    s.center = c;
    s.width = w;
    f.push_back(s);
  }
  TestFunctionSpec cp;
  cp.family = TestFamily::CoshPower;
  cp.sigma = 0.0;  // auto: 2 rho + 2
  f.push_back(cp);
  return f;
}

namespace {

double sublevel_psi(const RootDatum& datum, bool hyperbolic, double x) {
  const double j = density_J(datum, x);
  return hyperbolic ? j * std::cosh(x) : j;
}

// mu([0, r]) = int_0^r J dx
double mu_ball(const RootDatum& datum, double r) {
  GridOptions g;
  g.x_max = r;
  g.order = 32;
  const RadialGrid grid(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) sum += grid.weights()[i] * density_J(datum, grid.nodes()[i]);
  return sum;
}

}  // namespace

std::pair<double, double> young_sublevel_ratio(const RootDatum& datum, bool hyperbolic, double t_lo, double t_hi,
                                               int samples) {
  if (!datum.is_rank_one()) throw ConfigError("young_sublevel_ratio: rank-one datum required");
  if (!(t_lo > 0.0) || !(t_hi > t_lo) || samples < 2) throw ConfigError("young_sublevel_ratio: bad t range");
  double sup = 0.0, inf = kInfinity;
  for (int i = 0; i < samples; ++i) {
    const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (samples - 1));
    double hi = 1.0;
    while (sublevel_psi(datum, hyperbolic, hi) < t) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (sublevel_psi(datum, hyperbolic, mid) <= t ? lo : hi) = mid;
    }
    const double ratio = mu_ball(datum, 0.5 * (lo + hi)) / t;
    sup = std::max(sup, ratio);
    inf = std::min(inf, ratio);
  }
  return {sup, inf};
}

double flat_sublevel_measure(const RootDatum& datum, double k, double t) {
  if (!(k > 0.0) || !(t >= 0.0)) throw DomainError("flat_sublevel_measure: need k > 0, t >= 0");
  std::vector<double> m = datum.is_rank_one() ? std::vector<double>{datum.beta()} : datum.multiplicities();
  // Dirichlet integral of prod x_i^{m_i} over the unit ball of the positive orthant
  double log_c = 0.0, total = 0.0;
  for (double mi : m) {
    log_c += std::lgamma(0.5 * (mi + 1.0)) - std::log(2.0);
    total += 0.5 * (mi + 1.0);
  }
  log_c -= std::lgamma(total + 1.0);
  const double degree = 2.0 * total;  // sum m_i + n
  const double r = std::pow(t, 1.0 / k);
  return std::exp(log_c) * std::pow(r, degree);
}

namespace {

std::mt19937_64 step_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

StepFunction random_step_function(std::uint64_t seed, std::size_t index) {
  auto rng = step_rng(seed, index);
  const std::size_t cells = 10 + static_cast<std::size_t>(rng() % 41);
  StepFunction f;
  for (std::size_t i = 0; i < cells; ++i) {
    f.values.push_back(unit(rng));
    f.masses.push_back(0.1 + 0.9 * unit(rng));
  }
  return f;
}

StepFunction random_step_values(std::uint64_t seed, std::size_t index, const std::vector<double>& masses) {
  auto rng = step_rng(seed ^ 0x9e3779b97f4a7c15ULL, index);
  StepFunction f;
  f.masses = masses;
  for (std::size_t i = 0; i < masses.size(); ++i) f.values.push_back(unit(rng));
  return f;
}

}  // namespace hoft
