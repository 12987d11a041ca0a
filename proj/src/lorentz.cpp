#include "hoft/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hoft/errors.hpp"

namespace hoft {
namespace {

bool has_infinity(const StepFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.values[i] > 0.0 && f.masses[i] > 0.0 && (std::isinf(f.values[i]) || std::isinf(f.masses[i]))) return true;
  return false;
}

void check_shape(const StepFunction& f) {
  if (f.values.size() != f.masses.size()) throw DomainError("step function: values and masses differ in length");
}

}  // namespace

StepFunction to_step(const SampledFunction& f) {
  if (!f.measure || f.measure->size() != f.values.size()) throw DomainError("to_step: function and measure sizes differ");
  StepFunction s;
  s.values.reserve(f.size());
  for (const auto& v : f.values) s.values.push_back(std::abs(v));
  s.masses = f.measure->masses();
  return s;
}

double distribution_function(const StepFunction& f, double s) {
  check_shape(f);
  double mass = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.values[i] > s) mass += f.masses[i];
  return mass;
}

double distribution_function(const SampledFunction& f, double s) { return distribution_function(to_step(f), s); }

RearrangementProfile rearrangement(const StepFunction& f) {
  check_shape(f);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.values[i] > 0.0 && f.masses[i] > 0.0) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f.values[a] > f.values[b]; });
  RearrangementProfile profile;
  double t = 0.0;
  for (std::size_t i : order) {
    t += f.masses[i];
    if (!profile.values.empty() && profile.values.back() == f.values[i]) {
      profile.breakpoints.back() = t;
    } else {
      profile.values.push_back(f.values[i]);
      profile.breakpoints.push_back(t);
    }
  }
  return profile;
}

RearrangementProfile rearrangement(const SampledFunction& f) { return rearrangement(to_step(f)); }

double RearrangementProfile::integral_power(double p) const {
  double sum = 0.0, prev = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    sum += std::pow(values[j], p) * (breakpoints[j] - prev);
    prev = breakpoints[j];
  }
  return sum;
}

double RearrangementProfile::operator()(double t) const {
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  if (it == breakpoints.end()) return 0.0;
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

double lorentz_norm(const StepFunction& f, double p, double q) {
  if (!(p > 0.0) || std::isinf(p)) throw DomainError("lorentz_norm: p must be finite and positive");
  if (!(q > 0.0)) throw DomainError("lorentz_norm: q must be positive");
  if (has_infinity(f)) return kInfinity;
  const RearrangementProfile prof = rearrangement(f);
  if (std::isinf(q)) {
    double sup = 0.0;
    for (std::size_t j = 0; j < prof.values.size(); ++j)
      sup = std::max(sup, prof.values[j] * std::pow(prof.breakpoints[j], 1.0 / p));
    return sup;
  }
  // (q/p) int_{T_{j-1}}^{T_j} t^{q/p-1} dt = T_j^{q/p} - T_{j-1}^{q/p}
  const double e = q / p;
  double sum = 0.0, prev = 0.0;
  for (std::size_t j = 0; j < prof.values.size(); ++j) {
    const double now = std::pow(prof.breakpoints[j], e);
    sum += std::pow(prof.values[j], q) * (now - prev);
    prev = now;
  }
  return std::pow(sum, 1.0 / q);
}

double lorentz_norm(const SampledFunction& f, double p, double q) { return lorentz_norm(to_step(f), p, q); }

double step_lp_norm(const StepFunction& f, double p) {
  check_shape(f);
  if (has_infinity(f)) return kInfinity;
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.values[i] > 0.0) sum += std::pow(f.values[i], p) * f.masses[i];
  return std::pow(sum, 1.0 / p);
}

InequalityReport oneil_check(const std::vector<StepFunction>& gs, const std::vector<StepFunction>& hs, double q) {
  if (!(q > 2.0) || std::isinf(q)) throw ConfigError("oneil_check: q must lie in (2, inf)");
  if (gs.size() != hs.size()) throw ConfigError("oneil_check: need one h per g");
  const double qp = q / (q - 1.0);
  const double r = q / (q - 2.0);
  // The definition's q/p' prefactor equals q - 1; (q-1)^{1/q} is recorded as a reference constant.
  const double reference = std::pow(q - 1.0, 1.0 / q);

  InequalityReport rep;
  rep.inequality = "oneil";
  rep.add_parameter("q", q);
  rep.add_parameter("q_prime", qp);
  rep.add_parameter("r", r);
  rep.add_parameter("reference_constant", reference);
  rep.bound = 1.0 + 1e-9;
  int over_one = 0, over_reference = 0;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const StepFunction& g = gs[k];
    const StepFunction& h = hs[k];
    check_shape(g);
    check_shape(h);
    if (g.masses != h.masses) throw ConfigError("oneil_check: g and h must live on the same measure");
    StepFunction gh{std::vector<double>(g.size()), g.masses};
    for (std::size_t i = 0; i < g.size(); ++i) gh.values[i] = g.values[i] * h.values[i];
    const double lhs = lorentz_norm(gh, qp, q);
    const double rhs = step_lp_norm(g, q) * lorentz_norm(h, r, kInfinity);
    auto& row = rep.add_row("pair_" + std::to_string(k), lhs, rhs);
    if (row.ratio > 1.0 + 1e-9) ++over_one;
    if (row.ratio > reference * (1.0 + 1e-9)) ++over_reference;
  }
  rep.add_parameter("violations", over_one);
  rep.add_parameter("violations_at_reference_constant", over_reference);
  rep.finalize();
  return rep;
}

InequalityReport oneil_check(const SampledFunction& g, const SampledFunction& h, double q) {
  if (g.measure != h.measure &&
      (!g.measure || !h.measure || g.measure->masses() != h.measure->masses()))
    throw ConfigError("oneil_check: g and h must share a measure");
  return oneil_check(std::vector<StepFunction>{to_step(g)}, std::vector<StepFunction>{to_step(h)}, q);
}

double weak_type_constant(const std::vector<StepFunction>& outputs, const std::vector<double>& input_norms, double q,
                          const std::vector<double>& t_grid) {
  if (outputs.size() != input_norms.size()) throw DomainError("weak_type_constant: one input norm per output required");
  if (!(q > 0.0)) throw DomainError("weak_type_constant: q must be positive");
  double best = 0.0;
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    double sup = 0.0;
    if (t_grid.empty()) {
      sup = lorentz_norm(outputs[k], q, kInfinity);
    } else {
      for (double t : t_grid) {
        if (!(t > 0.0)) throw DomainError("weak_type_constant: t grid must be positive");
        const double mass = distribution_function(outputs[k], t);
        sup = std::max(sup, t * std::pow(mass, 1.0 / q));
      }
    }
    if (sup == 0.0) continue;
    best = std::max(best, sup / input_norms[k]);
  }
  return best;
}

}  // namespace hoft
