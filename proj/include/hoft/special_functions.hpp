#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hoft {

using Complex = std::complex<double>;

/// Principal branch of log Gamma(z). Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gauss hypergeometric function 2F1(a, b; c; z) restricted to z <= 0.
///
/// Uses the Pfaff transformation z -> z/(z-1) and the power series while that
/// series is well conditioned; otherwise integrates the hypergeometric equation
/// written in the variable t = asinh(sqrt(-z)). Symmetric in a and b bit for bit.
/// Throws DomainError when c is a non-positive integer or z > 0 and
/// AccuracyError when neither route converges.
Complex gauss_2f1(Complex a, Complex b, Complex c, double z);

/// How gauss_2f1_sinh_sweep treats nodes with t >= 2.
enum class LargeArgumentRoute {
  Connection,  ///< z -> 1/z connection formula when b - a is not near an integer
  Ode,         ///< keep integrating the ODE (reference route)
};

/// Values of 2F1(a, b; c; -sinh^2 t) at every t in `t_nodes` (non-negative,
/// non-decreasing). One forward sweep serves all nodes, which is what makes
/// whole-grid kernel tables affordable.
std::vector<Complex> gauss_2f1_sinh_sweep(Complex a, Complex b, Complex c,
                                          std::span<const double> t_nodes,
                                          LargeArgumentRoute route = LargeArgumentRoute::Connection);

/// Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0.
double bessel_j(double nu, double x);

/// Normalized Bessel function Gamma(nu+1) (x/2)^{-nu} J_nu(x); equals 1 at x = 0.
double bessel_j_normalized(double nu, double x);

}  // namespace hoft
