#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hoft/lorentz.hpp"
#include "hoft/report.hpp"
#include "hoft/root_datum.hpp"
#include "hoft/sampling.hpp"
#include "hoft/transforms.hpp"

namespace hoft {

constexpr double kWeylOrder = 2.0;  // |W| in rank one

/// Grids and shared inputs of a run.
struct HarnessSettings {
  GridOptions x_grid;
  GridOptions spectral_grid = default_spectral_grid();
  int refine = 2;  // grid multiplier of the stability sub-checks; 1 disables them
  std::uint64_t seed = 20240611;
  TestFunctionSpec calibration = default_calibration();

  static GridOptions default_spectral_grid();
  static TestFunctionSpec default_calibration();
};

/// Exponents (k, a, b) of the weighted Hardy-Littlewood check.
struct WeightSpec {
  double k = 0.0;
  double a = 0.0;
  double b = 0.0;

  /// k = beta, a = 0 and b fixed by a + b + beta + n = -(k + n).
  static WeightSpec natural(const RootDatum& datum);
  /// Failed blocking conditions: k >= 0, beta + n > 0, a + b + beta + n = -(k + n),
  /// 2(k+n) + a >= 0 and 2(k+n) + a + b <= 0. Empty when valid.
  std::vector<std::string> failures(const RootDatum& datum) const;
  /// a + b <= (2/3)(n - beta); recorded, never blocking.
  bool condition_i(const RootDatum& datum) const;
  /// Throws ConfigError listing every failed blocking condition.
  void validate(const RootDatum& datum) const;
};

/// One (x, xi) grid pair with everything sampled on it. Built lazily by Workspace.
struct Level {
  int factor = 1;
  std::shared_ptr<const RadialGrid> x;
  std::shared_ptr<const RadialGrid> spectral;
  MeasurePtr mu;   // rank one
  MeasurePtr nu;   // rank one, calibrated kappa
  std::map<std::string, SampledFunction> functions;                 // by spec id, on mu
  std::map<std::pair<double, std::string>, SpectralFunction> hat;   // (eta, id) -> F f
  std::map<std::pair<double, std::string>, SpectralFunction> flat;  // (m, id) -> Hankel factor
  std::map<double, MeasurePtr> axis_measures;                       // m -> |x|^m dx
};

/// Per-datum cache of calibrated constants, sampled families and transforms,
/// shared between suites of one run.
class Workspace {
 public:
  Workspace(RootDatum datum, HarnessSettings settings);

  /// Datum with calibrated kappa (rank one only).
  const RootDatum& datum() const noexcept { return datum_; }
  /// Datum with calibrated kappa0, calibrated on first use.
  const RootDatum& flat_datum();
  const HarnessSettings& settings() const noexcept { return settings_; }

  /// factor 1 is the base grid; factor settings().refine the stability grid.
  Level& level(int factor);

  /// Resolves "sigma = auto" (sigma <= 0) of cosh_power to 2 rho + 2.
  TestFunctionSpec resolve(const TestFunctionSpec& spec) const;

  const SampledFunction& function(Level& L, const TestFunctionSpec& spec);
  /// Transforms of every spec at shift eta, computing missing ones in one batch.
  std::vector<const SpectralFunction*> transforms(Level& L, const std::vector<TestFunctionSpec>& specs, double eta);

  /// |x|^m dx on the level's radial grid.
  MeasurePtr axis_measure(Level& L, double m);
  /// The spec sampled on |x|^m dx.
  SampledFunction axis_function(Level& L, const TestFunctionSpec& spec, double m);
  /// Hankel transforms with index (m-1)/2 of the specs sampled on |x|^m dx.
  std::vector<const SpectralFunction*> axis_transforms(Level& L, const std::vector<TestFunctionSpec>& specs, double m);

  GridMetadata metadata(int factor) const;

 private:
  RootDatum datum_;
  HarnessSettings settings_;
  std::optional<RootDatum> flat_datum_;
  std::map<int, std::unique_ptr<Level>> levels_;
  std::recursive_mutex lock_;
};

/// Workspaces keyed by datum description.
class Harness {
 public:
  explicit Harness(HarnessSettings settings) : settings_(std::move(settings)) {}
  Workspace& workspace(const RootDatum& datum, const HarnessSettings& settings);
  Workspace& workspace(const RootDatum& datum) { return workspace(datum, settings_); }
  const HarnessSettings& settings() const noexcept { return settings_; }

 private:
  HarnessSettings settings_;
  std::map<std::string, std::unique_ptr<Workspace>> spaces_;
  std::mutex lock_;
};

/// (x, y) series written next to a report.
struct PlotSeries {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct SuiteOutput {
  InequalityReport report;
  std::vector<PlotSeries> plots;
};

using Family = std::vector<TestFunctionSpec>;

/// Default family: gaussian bumps with (center, width) in {(0,0.5), (0,1), (0,2),
/// (1.5,0.5), (1.5,1)} and cosh_power with sigma = 2 rho + 2.
Family default_family();

/// Sup over t in [t_lo, t_hi] (log grid) of mu({psi <= t})/t for an increasing psi
/// on the half-line with measure J dx. Returns {sup, inf} of the ratio.
std::pair<double, double> young_sublevel_ratio(const RootDatum& datum, bool hyperbolic, double t_lo, double t_hi,
                                               int samples = 61);

/// mu0({|x|^k <= t}) on the positive orthant (rank one: the half-line).
double flat_sublevel_measure(const RootDatum& datum, double k, double t);

// Suites. Each validates its parameters (ConfigError), computes rows on the base
// grid, and compares against the refined grid when settings().refine > 1.
SuiteOutput check_plancherel(Workspace& ws, const Family& family);
SuiteOutput check_inversion(Workspace& ws, const Family& family);
SuiteOutput check_kernel_bound(Workspace& ws, const std::vector<double>& xis, int samples);
SuiteOutput check_c_function(Workspace& ws);
SuiteOutput check_closed_forms();
SuiteOutput check_flat_limit(Workspace& ws, double xi, const std::vector<double>& eps, double t_max, double tolerance_eps,
                             double tolerance);
SuiteOutput check_lorentz(std::uint64_t seed, int count, Workspace* smooth_inputs, const Family& family);
SuiteOutput check_oneil(std::uint64_t seed, int count, const std::vector<double>& qs);
SuiteOutput check_hausdorff_young(Workspace& ws, const std::vector<double>& ps, const Family& family);
SuiteOutput check_hausdorff_young_shifted(Workspace& ws, double p, double eta, const Family& family);
SuiteOutput check_hl_weighted(Workspace& ws, const std::vector<double>& ps, const WeightSpec& w, const Family& family);
SuiteOutput check_hl_young(Workspace& ws, const std::vector<double>& qs, const Family& family);
SuiteOutput check_hl_ver3_i(Workspace& ws, double q, const std::vector<double>& ps, double eta, const Family& family);
SuiteOutput check_hl_ver3_ii(Workspace& ws, double q, const std::vector<double>& ps, double eta, const Family& family);
SuiteOutput check_flat_plancherel(Workspace& ws, const Family& family);
SuiteOutput check_flat_hl(Workspace& ws, const std::vector<double>& ps, const Family& family);
SuiteOutput check_flat_rs(Workspace& ws, double q_i, const std::vector<double>& ps_i, double q_ii,
                          const std::vector<double>& ps_ii, const Family& family);

/// Random non-negative step function with 10-50 cells, values in [0, 1) and masses in [0.1, 1).
StepFunction random_step_function(std::uint64_t seed, std::size_t index);
/// Random values on the cells of `masses`.
StepFunction random_step_values(std::uint64_t seed, std::size_t index, const std::vector<double>& masses);

}  // namespace hoft
