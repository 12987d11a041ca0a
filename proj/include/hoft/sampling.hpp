#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hoft/special_functions.hpp"

namespace hoft {

class RootDatum;

struct GridOptions {
  double x_max = 20.0;
  int order = 64;            // Gauss-Legendre points per panel
  int panels_per_unit = 1;
  int grading_levels = 6;    // geometric subdivisions of the first panel towards 0
  int grading_order = 16;    // Gauss-Legendre points on each graded panel

  /// Same grid with `factor` times as many panels per unit.
  GridOptions refined(int factor) const;
};

/// Composite Gauss-Legendre rule on [0, x_max]. Immutable.
class RadialGrid {
 public:
  explicit RadialGrid(const GridOptions& options);

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double x_max() const noexcept { return options_.x_max; }
  const GridOptions& options() const noexcept { return options_; }

 private:
  GridOptions options_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// A density against Lebesgue measure on a radial grid, or on a tensor product of
/// radial grids (flattened row-major, last axis fastest). Immutable.
class WeightedMeasure {
 public:
  WeightedMeasure(std::string label, std::shared_ptr<const RadialGrid> grid, std::vector<double> density);
  WeightedMeasure(std::string label, std::vector<std::shared_ptr<const RadialGrid>> axes, std::vector<double> density);

  const std::string& label() const noexcept { return label_; }
  std::size_t dimension() const noexcept { return axes_.size(); }
  const RadialGrid& grid(std::size_t axis = 0) const { return *axes_.at(axis); }
  std::shared_ptr<const RadialGrid> grid_ptr(std::size_t axis = 0) const { return axes_.at(axis); }
  const std::vector<double>& density() const noexcept { return density_; }
  /// Quadrature weight times density: the mass of the cell around each node.
  const std::vector<double>& masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

 private:
  std::string label_;
  std::vector<std::shared_ptr<const RadialGrid>> axes_;
  std::vector<double> density_;
  std::vector<double> masses_;
};

using MeasurePtr = std::shared_ptr<const WeightedMeasure>;

/// Lebesgue measure on a radial grid.
MeasurePtr lebesgue_measure(std::shared_ptr<const RadialGrid> grid);
/// d mu = J(x) dx (rank one).
MeasurePtr mu_measure(const RootDatum& datum, std::shared_ptr<const RadialGrid> grid);
/// d mu0 = omega_m(x) dx, on the tensor grid grid^n for a flat product datum.
MeasurePtr mu0_measure(const RootDatum& datum, std::shared_ptr<const RadialGrid> grid);

/// Values of a function at the nodes of a measure's grid.
struct SampledFunction {
  std::string id;
  MeasurePtr measure;
  std::vector<Complex> values;

  std::size_t size() const noexcept { return values.size(); }
  /// Same function with every value multiplied by `factor`.
  SampledFunction scaled(Complex factor) const;
};

struct IntegralResult {
  Complex value;
  double tail_estimate = 0.0;  // |contribution of the last unit interval of the grid|
};

/// Integral of f against its measure. Throws DomainError on non-finite values.
IntegralResult integrate(const SampledFunction& f);

/// (int |f|^p d measure)^{1/p}; p >= 1.
double lp_norm(const SampledFunction& f, double p);

/// Same as lp_norm with an extra pointwise weight (weight.size() == f.size()).
double weighted_lp_norm(const SampledFunction& f, const std::vector<double>& weight, double p);

enum class TestFamily { GaussianBump, CoshPower, PlateauBump, RandomBand };

/// Parameters of one test function. Unused fields are ignored by the family.
struct TestFunctionSpec {
  TestFamily family = TestFamily::GaussianBump;
  double center = 0.0;     // gaussian, plateau
  double width = 1.0;      // gaussian standard width, plateau half-width
  double edge = 0.25;      // plateau transition length
  double sigma = 4.0;      // cosh_power exponent
  int terms = 4;           // random_band
  std::uint64_t seed = 1;  // random_band

  /// Stable identifier such as "gaussian(c=1.5,w=0.5)".
  std::string id() const;
};

std::string family_name(TestFamily family);
/// Throws ConfigError for unknown names.
TestFamily parse_family(const std::string& name);

/// Evaluate the test function at radius x >= 0.
double evaluate_test_function(const TestFunctionSpec& spec, double x);

/// Sample a test function on a measure's grid. Throws ConfigError when the
/// parameters are out of range (width <= 0, edge > width, ...).
SampledFunction make_test_function(const TestFunctionSpec& spec, MeasurePtr measure);

/// Integrability guard: |f(x)| e^{growth x} must be non-increasing on the last quarter
/// of the grid. Throws ConfigError naming `condition` otherwise.
void require_decay(const SampledFunction& f, double growth, const std::string& condition);

}  // namespace hoft
