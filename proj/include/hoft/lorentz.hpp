#pragma once

#include <limits>
#include <vector>

#include "hoft/report.hpp"
#include "hoft/sampling.hpp"

namespace hoft {

/// A non-negative step function: |f| value and mass of each cell.
struct StepFunction {
  std::vector<double> values;
  std::vector<double> masses;

  std::size_t size() const noexcept { return values.size(); }
};

/// Cell value |f(x_i)|, cell mass = quadrature weight x density.
StepFunction to_step(const SampledFunction& f);

/// Non-increasing rearrangement f* of a step function: f*(t) = values[j] for
/// t in [breakpoints[j-1], breakpoints[j]) with breakpoints[-1] = 0.
struct RearrangementProfile {
  std::vector<double> breakpoints;
  std::vector<double> values;

  /// int_0^inf f*(t)^p dt, exact for the step profile.
  double integral_power(double p) const;
  /// f*(t), right-continuous; 0 beyond the total mass.
  double operator()(double t) const;
  double total_mass() const noexcept { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
};

/// Measure of {|f| > s}.
double distribution_function(const StepFunction& f, double s);
double distribution_function(const SampledFunction& f, double s);

/// Cells sorted by descending value (stable in cell index); cells with value 0
/// or mass 0 are dropped, equal values are merged into one segment.
RearrangementProfile rearrangement(const StepFunction& f);
RearrangementProfile rearrangement(const SampledFunction& f);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// ||f||*_{p,q} = ((q/p) int t^{q/p-1} f*(t)^q dt)^{1/q}, or sup_t t lambda_f(t)^{1/p}
/// when q = inf. Evaluated in closed form on each segment of the profile.
/// Returns +inf when a value or mass is infinite.
double lorentz_norm(const StepFunction& f, double p, double q);
double lorentz_norm(const SampledFunction& f, double p, double q);

/// ||f||_p of a step function, (sum v^p m)^{1/p}.
double step_lp_norm(const StepFunction& f, double p);

/// Checks ||gh||*_{q',q} <= ||g||_q ||h||*_{r,inf}, r = q/(q-2), for every pair
/// (gs[i], hs[i]). Rows hold lhs, rhs and ratio per pair; the report passes when
/// every ratio is <= 1 + 1e-9. Throws ConfigError when a pair's cell masses differ.
InequalityReport oneil_check(const std::vector<StepFunction>& gs, const std::vector<StepFunction>& hs, double q);
InequalityReport oneil_check(const SampledFunction& g, const SampledFunction& h, double q);

/// sup over t of t * measure({|Tf| > t})^{1/q} / ||f||_p, maximized over the family.
/// outputs[i] is T applied to the input whose L^p norm is input_norms[i]. With an
/// empty t_grid the supremum is taken exactly over the profile breakpoints.
double weak_type_constant(const std::vector<StepFunction>& outputs, const std::vector<double>& input_norms,
                          double q = 1.0, const std::vector<double>& t_grid = {});

}  // namespace hoft
