#include "hoft/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <boost/math/special_functions/legendre.hpp>

#include "hoft/errors.hpp"
#include "hoft/root_datum.hpp"

namespace hoft {
namespace {

struct GaussRule {
  std::vector<double> x;  // on [-1, 1], increasing
  std::vector<double> w;
};

const GaussRule& gauss_rule(int n) {
  static std::mutex lock;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // legendre_p_zeros returns the non-negative zeros in increasing order
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
  GaussRule rule;
  for (auto z = zeros.rbegin(); z != zeros.rend(); ++z) {
    if (*z == 0.0) continue;
    rule.x.push_back(-*z);
  }
  for (double z : zeros) rule.x.push_back(z);
  for (double z : rule.x) {
    const double dp = boost::math::legendre_p_prime(n, z);
    rule.w.push_back(2.0 / ((1.0 - z * z) * dp * dp));
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

void append_panel(double a, double b, int order, std::vector<double>& nodes, std::vector<double>& weights) {
  const GaussRule& rule = gauss_rule(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    nodes.push_back(mid + half * rule.x[i]);
    weights.push_back(half * rule.w[i]);
  }
}

}  // namespace

GridOptions GridOptions::refined(int factor) const {
  if (factor < 1) throw ConfigError("refine factor must be >= 1");
  GridOptions out = *this;
  out.panels_per_unit *= factor;
  return out;
}

RadialGrid::RadialGrid(const GridOptions& options) : options_(options) {
  if (!(options.x_max > 0.0) || !std::isfinite(options.x_max)) throw ConfigError("grid: x_max must be positive");
  if (options.order < 2 || options.grading_order < 2) throw ConfigError("grid: Gauss-Legendre order must be >= 2");
  if (options.panels_per_unit < 1) throw ConfigError("grid: panels_per_unit must be >= 1");
  if (options.grading_levels < 0 || options.grading_levels > 40) throw ConfigError("grid: grading_levels must be in [0, 40]");

  const double h = 1.0 / options.panels_per_unit;
  const auto panels = static_cast<std::size_t>(std::ceil(options.x_max / h - 1e-9));
  for (std::size_t k = 0; k < panels; ++k) {
    const double a = static_cast<double>(k) * h;
    const double b = std::min(options.x_max, a + h);
    if (k == 0 && options.grading_levels > 0) {
      double left = 0.0;
      double right = b / std::ldexp(1.0, options.grading_levels);
      append_panel(left, right, options.grading_order, nodes_, weights_);
      for (int level = options.grading_levels; level > 0; --level) {
        left = right;
        right = b / std::ldexp(1.0, level - 1);
        append_panel(left, right, options.grading_order, nodes_, weights_);
      }
    } else {
      append_panel(a, b, options.order, nodes_, weights_);
    }
  }
}

WeightedMeasure::WeightedMeasure(std::string label, std::shared_ptr<const RadialGrid> grid, std::vector<double> density)
    : WeightedMeasure(std::move(label), std::vector<std::shared_ptr<const RadialGrid>>{std::move(grid)}, std::move(density)) {}

WeightedMeasure::WeightedMeasure(std::string label, std::vector<std::shared_ptr<const RadialGrid>> axes,
                                 std::vector<double> density)
    : label_(std::move(label)), axes_(std::move(axes)), density_(std::move(density)) {
  if (axes_.empty()) throw DomainError("measure: at least one axis required");
  std::size_t total = 1;
  for (const auto& g : axes_) total *= g->size();
  if (density_.size() != total) throw DomainError("measure '" + label_ + "': density size does not match grid");
  masses_.resize(total);
  std::vector<std::size_t> index(axes_.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    const double d = density_[flat];
    if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("measure '" + label_ + "': density must be finite and >= 0");
    double w = 1.0;
    for (std::size_t a = 0; a < axes_.size(); ++a) w *= axes_[a]->weights()[index[a]];
    masses_[flat] = w * d;
    for (std::size_t a = axes_.size(); a-- > 0;) {
      if (++index[a] < axes_[a]->size()) break;
      index[a] = 0;
    }
  }
}

MeasurePtr lebesgue_measure(std::shared_ptr<const RadialGrid> grid) {
  std::vector<double> density(grid->size(), 1.0);
  return std::make_shared<WeightedMeasure>("lebesgue", std::move(grid), std::move(density));
}

MeasurePtr mu_measure(const RootDatum& datum, std::shared_ptr<const RadialGrid> grid) {
  std::vector<double> density;
  density.reserve(grid->size());
  for (double x : grid->nodes()) density.push_back(density_J(datum, x));
  return std::make_shared<WeightedMeasure>("mu_J", std::move(grid), std::move(density));
}

MeasurePtr mu0_measure(const RootDatum& datum, std::shared_ptr<const RadialGrid> grid) {
  const std::size_t n = datum.is_rank_one() ? 1 : datum.multiplicities().size();
  std::vector<std::shared_ptr<const RadialGrid>> axes(n, grid);
  std::size_t total = 1;
  for (std::size_t a = 0; a < n; ++a) total *= grid->size();
  std::vector<double> density(total);
  std::vector<std::size_t> index(n, 0);
  std::vector<double> x(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < n; ++a) x[a] = grid->nodes()[index[a]];
    density[flat] = dunkl_weight(datum, x);
    for (std::size_t a = n; a-- > 0;) {
      if (++index[a] < grid->size()) break;
      index[a] = 0;
    }
  }
  return std::make_shared<WeightedMeasure>("mu0_flat", std::move(axes), std::move(density));
}

SampledFunction SampledFunction::scaled(Complex factor) const {
  SampledFunction out = *this;
  for (auto& v : out.values) v *= factor;
  return out;
}

IntegralResult integrate(const SampledFunction& f) {
  if (!f.measure || f.values.size() != f.measure->size()) throw DomainError("integrate: function and measure sizes differ");
  const auto& m = f.measure->masses();
  IntegralResult out;
  Complex tail = 0.0;
  const bool radial = f.measure->dimension() == 1;
  const double tail_start = radial ? f.measure->grid().x_max() - 1.0 : 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Complex v = f.values[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("integrate: non-finite value in '" + f.id + "'");
    out.value += v * m[i];
    if (radial && f.measure->grid().nodes()[i] >= tail_start) tail += v * m[i];
  }
  out.tail_estimate = std::abs(tail);
  return out;
}

double lp_norm(const SampledFunction& f, double p) {
  static const std::vector<double> none;
  return weighted_lp_norm(f, none, p);
}

double weighted_lp_norm(const SampledFunction& f, const std::vector<double>& weight, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
  if (!f.measure || f.values.size() != f.measure->size()) throw DomainError("lp_norm: function and measure sizes differ");
  if (!weight.empty() && weight.size() != f.size()) throw DomainError("lp_norm: weight size mismatch");
  const auto& m = f.measure->masses();
  double sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double a = std::abs(f.values[i]);
    if (a == 0.0 || m[i] == 0.0) continue;
    const double w = weight.empty() ? 1.0 : weight[i];
    sum += std::pow(a, p) * m[i] * w;
  }
  return std::pow(sum, 1.0 / p);
}

void require_decay(const SampledFunction& f, double growth, const std::string& condition) {
  if (!f.measure || f.measure->dimension() != 1) return;
  const RadialGrid& grid = f.measure->grid();
  const double start = 0.75 * grid.x_max();
  double previous = -1.0;
  double first = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.nodes()[i];
    if (x < start) continue;
    const double a = std::abs(f.values[i]);
    // log form avoids overflow of e^{growth x}
    const double g = (a == 0.0) ? 0.0 : std::exp(std::log(a) + growth * x);
    if (first < 0.0) first = g;
    if (!std::isfinite(g) || (previous >= 0.0 && g > previous * (1.0 + 1e-9) + 1e-300)) {
      throw ConfigError("test function '" + f.id + "' violates the integrability guard " + condition +
                        ": |f(x)| e^{" + std::to_string(growth) + " x} is not decaying on the last quarter of the grid");
    }
    previous = g;
  }
}

}  // namespace hoft
