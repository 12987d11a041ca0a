#include "hoft/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/bessel.hpp>

#include "hoft/errors.hpp"

namespace hoft {
namespace {

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

// Valid for re(z) >= 1/2, where every log below stays on its principal sheet.
Complex lanczos_log_gamma(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    series += kLanczosCoeffs[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z)) {
    std::ostringstream msg;
    msg << "log_gamma: pole at z = " << z.real();
    throw DomainError(msg.str());
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);

  // Shift right with log Gamma(z) = log Gamma(z + N) - sum log(z + k). With
  // principal logs this reproduces the principal branch off the negative axis.
  const double shift = std::ceil(0.5 - z.real());
  if (shift > 1.0e6) {
    throw DomainError("log_gamma: argument too far into the left half-plane");
  }
  const int n = static_cast<int>(shift);
  Complex correction = 0.0;
  for (int k = 0; k < n; ++k) correction += std::log(z + static_cast<double>(k));
  return lanczos_log_gamma(z + static_cast<double>(n)) - correction;
}

double bessel_j(double nu, double x) {
  if (nu < -0.5) throw DomainError("bessel_j: order below -1/2");
  if (x < 0.0 || std::isnan(x)) throw DomainError("bessel_j: negative argument");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  return boost::math::cyl_bessel_j(nu, x);
}

double bessel_j_normalized(double nu, double x) {
  if (nu < -0.5) throw DomainError("bessel_j_normalized: order below -1/2");
  if (x < 0.0 || std::isnan(x)) throw DomainError("bessel_j_normalized: negative argument");
  if (x <= 2.0) {
    // sum_k (-x^2/4)^k / (k! (nu+1)_k): no cancellation for x <= 2
    const double y = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= y / (k * (nu + k));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  if (nu == 0.5) return std::sin(x) / x;
  if (nu == -0.5) return std::cos(x);
  const double log_scale = std::lgamma(nu + 1.0) - nu * std::log(0.5 * x);
  return std::exp(log_scale) * boost::math::cyl_bessel_j(nu, x);
}

}  // namespace hoft
