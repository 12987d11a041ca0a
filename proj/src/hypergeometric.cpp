// Gauss hypergeometric function on the negative real axis.
//
// Three routes. Near z = 0 the Pfaff-transformed series
//   2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; w),  w = z/(z-1) in [0,1)
// is summed directly. Further out, z = -sinh^2 t turns the hypergeometric
// equation into
//   F'' + [(2c-1) coth t + (2(a+b)-2c+1) tanh t] F' + 4ab F = 0
// which is integrated from a small t_s (seeded by the series) with an
// embedded Runge-Kutta-Fehlberg 7(8) pair. The unknown is rescaled by
// e^{s t}, s = 2 min(re a, re b), so that tolerances act on an O(1) quantity.
// Beyond t = 2 the z -> 1/z connection formula converges fast and replaces the
// ODE, except when b - a is (nearly) an integer and the formula degenerates.

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "hoft/errors.hpp"
#include "hoft/special_functions.hpp"

namespace hoft {
namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<Complex, 2>;

constexpr double kOdeRelTol = 1e-13;
constexpr double kOdeAbsTol = 1e-15;
constexpr std::size_t kOdeMaxSteps = 200000;
constexpr int kSeriesMaxTerms = 20000;
constexpr double kConnectionStart = 2.0;
constexpr double kIntegerGap = 1e-3;

struct SeriesValue {
  Complex sum;
  Complex derivative;  // d/dw of the series
  double max_term = 0.0;
  double last_rel = 0.0;
  bool converged = false;
};

// sum_n (a)_n (b)_n / ((c)_n n!) w^n for |w| < 1
SeriesValue hyp_series(Complex a, Complex b, Complex c, double w) {
  SeriesValue out;
  Complex term = 1.0;
  Complex sum = 1.0;
  Complex dsum = 0.0;
  out.max_term = 1.0;
  if (w == 0.0) {
    out.sum = 1.0;
    out.derivative = a * b / c;
    out.converged = true;
    return out;
  }
  int small_in_a_row = 0;
  for (int n = 0; n < kSeriesMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * w;
    sum += term;
    dsum += (dn + 1.0) * term;
    const double mag = std::abs(term);
    out.max_term = std::max(out.max_term, mag);
    out.last_rel = mag / std::max(std::abs(sum), 1e-300);
    // The term ratio tends to w < 1, so once past the hump small terms stay small.
    const double ratio = std::abs((a + dn + 1.0) * (b + dn + 1.0) / ((c + dn + 1.0) * (dn + 2.0))) * std::abs(w);
    if (out.last_rel < 1e-17 && ratio < 0.95) {
      if (++small_in_a_row >= 2) {
        out.converged = true;
        break;
      }
    } else {
      small_in_a_row = 0;
    }
    if (term == 0.0) {
      out.converged = true;
      break;
    }
  }
  out.sum = sum;
  out.derivative = dsum / w;
  return out;
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// Orders (a, b) so every route sees the same pair whichever way it was passed.
void canonical_order(Complex& a, Complex& b) {
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);
}

struct PfaffPoint {
  Complex value;
  Complex dvalue_dt;
  double conditioning = 1.0;  // max term / |sum|
  bool converged = false;
  double last_rel = 0.0;
};

// Value and t-derivative of 2F1(a,b;c;-sinh^2 t) from the Pfaff series.
PfaffPoint pfaff_at(Complex a, Complex b, Complex c, double t) {
  const double th = std::tanh(t);
  const double w = th * th;
  const double ch = std::cosh(t);
  const SeriesValue s = hyp_series(a, c - b, c, w);
  const Complex prefactor = std::exp(-2.0 * a * std::log(ch));
  PfaffPoint p;
  p.value = prefactor * s.sum;
  const double dw_dt = 2.0 * th / (ch * ch);
  p.dvalue_dt = -2.0 * a * th * p.value + prefactor * s.derivative * dw_dt;
  p.conditioning = s.max_term / std::max(std::abs(s.sum), 1e-300);
  p.converged = s.converged;
  p.last_rel = s.last_rel;
  return p;
}

double series_start(Complex a, Complex b, Complex c) {
  const double coupling = 1.0 + std::abs(a) * std::abs(c - b) + std::abs(b) * std::abs(c - a);
  const double t = std::sqrt(0.02 * std::max(std::abs(c), 0.5) / coupling);
  return std::clamp(t, 1e-8, 0.25);
}

class SinhSystem {
 public:
  SinhSystem(Complex a, Complex b, Complex c)
      : k_coth_(2.0 * c - 1.0),
        k_tanh_(2.0 * (a + b) - 2.0 * c + 1.0),
        k_zero_(4.0 * a * b),
        shift_(2.0 * std::min(a.real(), b.real())) {}

  double shift() const { return shift_; }

  // State (u, v) = e^{s t} (F, F').
  void operator()(const State& y, State& dy, double t) const {
    const double e = std::exp(-2.0 * t);
    const double one_minus_e = -std::expm1(-2.0 * t);
    const double coth = (1.0 + e) / one_minus_e;
    const double tanh = one_minus_e / (1.0 + e);
    const Complex damping = k_coth_ * coth + k_tanh_ * tanh;
    dy[0] = shift_ * y[0] + y[1];
    dy[1] = (shift_ - damping) * y[1] - k_zero_ * y[0];
  }

 private:
  Complex k_coth_;
  Complex k_tanh_;
  Complex k_zero_;
  double shift_;
};

void validate(Complex c) {
  if (is_nonpositive_integer(c)) {
    std::ostringstream msg;
    msg << "gauss_2f1: c = " << c.real() << " is a pole of the series";
    throw DomainError(msg.str());
  }
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("gauss_2f1: non-finite c");
}


bool near_integer(Complex z, double tol) {
  return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

// 1 / Gamma(z) in log form; `zero` is set at the poles of Gamma.
Complex log_rgamma(Complex z, bool& zero) {
  zero = is_nonpositive_integer(z);
  return zero ? Complex(0.0) : -log_gamma(z);
}

// Connection formula z -> 1/z for 2F1(a,b;c;-sinh^2 t), valid when b - a is not
// an integer; converges geometrically with ratio 1/sinh^2 t.
class ConnectionExpansion {
 public:
  ConnectionExpansion(Complex a, Complex b, Complex c) : a_(a), b_(b), c_(c) {
    const Complex log_gc = log_gamma(c);
    bool z1 = false;
    bool z2 = false;
    const Complex r1 = log_rgamma(b, z1) + log_rgamma(c - a, z2);
    zero_first_ = z1 || z2;
    if (!zero_first_) log_coeff_first_ = log_gc + log_gamma(b - a) + r1;
    const Complex r2 = log_rgamma(a, z1) + log_rgamma(c - b, z2);
    zero_second_ = z1 || z2;
    if (!zero_second_) log_coeff_second_ = log_gc + log_gamma(a - b) + r2;
  }

  Complex operator()(double t) const {
    const double sh = std::sinh(t);
    const double inv_z = -1.0 / (sh * sh);
    const double log_mz = 2.0 * std::log(sh);
    Complex value = 0.0;
    if (!zero_first_) {
      const SeriesValue s = hyp_series(a_, a_ - c_ + 1.0, a_ - b_ + 1.0, inv_z);
      check(s);
      value += std::exp(log_coeff_first_ - a_ * log_mz) * s.sum;
    }
    if (!zero_second_) {
      const SeriesValue s = hyp_series(b_, b_ - c_ + 1.0, b_ - a_ + 1.0, inv_z);
      check(s);
      value += std::exp(log_coeff_second_ - b_ * log_mz) * s.sum;
    }
    return value;
  }

 private:
  static void check(const SeriesValue& s) {
    if (!s.converged) throw AccuracyError("gauss_2f1: connection series did not converge", s.last_rel);
  }

  Complex a_, b_, c_;
  Complex log_coeff_first_, log_coeff_second_;
  bool zero_first_ = false;
  bool zero_second_ = false;
};

// Integrates from the series seed to every node in `times` (sorted, > t_s).
void integrate_sweep(Complex a, Complex b, Complex c, double t_start, std::span<const double> times,
                     std::span<Complex> out) {
  const SinhSystem system(a, b, c);
  const PfaffPoint seed = pfaff_at(a, b, c, t_start);
  if (!seed.converged || seed.conditioning > 1e3) {
    throw AccuracyError("gauss_2f1: series seed for the ODE route did not converge", seed.last_rel);
  }
  const double s = system.shift();
  State y{seed.value * std::exp(s * t_start), seed.dvalue_dt * std::exp(s * t_start)};

  std::vector<double> obs;
  obs.reserve(times.size() + 1);
  obs.push_back(t_start);
  obs.insert(obs.end(), times.begin(), times.end());

  std::size_t idx = 0;
  auto observer = [&](const State& state, double t) {
    if (idx == 0) {  // the start point itself
      ++idx;
      return;
    }
    out[idx - 1] = state[0] * std::exp(-s * t);
    ++idx;
  };
  auto stepper = odeint::make_controlled(kOdeAbsTol, kOdeRelTol, odeint::runge_kutta_fehlberg78<State>());
  const double dt0 = std::min(0.5 * t_start, 1e-3);
  try {
    odeint::integrate_times(stepper, system, y, obs.begin(), obs.end(), dt0, observer,
                            odeint::max_step_checker(kOdeMaxSteps));
  } catch (const std::exception& e) {
    std::ostringstream msg;
    msg << "gauss_2f1: ODE route aborted (" << e.what() << ")";
    throw AccuracyError(msg.str(), std::numeric_limits<double>::infinity());
  }
}

}  // namespace

std::vector<Complex> gauss_2f1_sinh_sweep(Complex a, Complex b, Complex c, std::span<const double> t_nodes,
                                          LargeArgumentRoute route) {
  validate(c);
  canonical_order(a, b);
  std::vector<Complex> out(t_nodes.size());
  if (t_nodes.empty()) return out;
  double prev = 0.0;
  for (double t : t_nodes) {
    if (!(t >= 0.0) || t < prev) throw DomainError("gauss_2f1_sinh_sweep: nodes must be non-negative and sorted");
    prev = t;
  }

  const double t_start = series_start(a, b, c);
  std::size_t first_ode = 0;
  while (first_ode < t_nodes.size() && t_nodes[first_ode] <= t_start) {
    const double t = t_nodes[first_ode];
    out[first_ode] = (t == 0.0) ? Complex(1.0) : pfaff_at(a, b, c, t).value;
    ++first_ode;
  }
  if (first_ode == t_nodes.size()) return out;

  std::size_t first_far = t_nodes.size();
  const bool use_connection =
      route == LargeArgumentRoute::Connection && !near_integer(b - a, kIntegerGap);
  if (use_connection) {
    first_far = first_ode;
    while (first_far < t_nodes.size() && t_nodes[first_far] < kConnectionStart) ++first_far;
    if (first_far < t_nodes.size()) {
      const ConnectionExpansion far(a, b, c);
      for (std::size_t i = first_far; i < t_nodes.size(); ++i) out[i] = far(t_nodes[i]);
    }
  }
  if (first_far == first_ode) return out;

  // Coincident nodes are integrated once and copied.
  std::vector<double> unique_times;
  std::vector<std::size_t> slot(first_far - first_ode);
  for (std::size_t i = first_ode; i < first_far; ++i) {
    if (unique_times.empty() || t_nodes[i] > unique_times.back()) unique_times.push_back(t_nodes[i]);
    slot[i - first_ode] = unique_times.size() - 1;
  }
  std::vector<Complex> unique_values(unique_times.size());
  integrate_sweep(a, b, c, t_start, unique_times, unique_values);
  for (std::size_t i = first_ode; i < first_far; ++i) out[i] = unique_values[slot[i - first_ode]];
  return out;
}

Complex gauss_2f1(Complex a, Complex b, Complex c, double z) {
  validate(c);
  if (std::isnan(z) || z > 0.0) throw DomainError("gauss_2f1: only z <= 0 is supported");
  if (!std::isfinite(z)) throw DomainError("gauss_2f1: z must be finite");
  canonical_order(a, b);
  if (z == 0.0) return 1.0;

  const double w = -z / (1.0 - z);
  if (w <= 0.9) {
    const SeriesValue s = hyp_series(a, c - b, c, w);
    const double conditioning = s.max_term / std::max(std::abs(s.sum), 1e-300);
    if (s.converged && conditioning <= 1e3) return std::exp(-a * std::log1p(-z)) * s.sum;
  }
  const double node[1] = {std::asinh(std::sqrt(-z))};
  return gauss_2f1_sinh_sweep(a, b, c, node)[0];
}

}  // namespace hoft
