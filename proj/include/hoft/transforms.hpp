#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hoft/root_datum.hpp"
#include "hoft/sampling.hpp"
#include "hoft/special_functions.hpp"

namespace hoft {

/// Values of a transform on a spectral grid xi in [0, Lambda_max], evaluated at
/// i xi + eta (eta = 0 for the unshifted transform).
struct SpectralFunction {
  std::string id;
  std::shared_ptr<const RadialGrid> grid;
  double eta = 0.0;
  std::vector<Complex> values;
  std::vector<std::string> warnings;

  /// The values as a function on `measure`, which must live on the same grid.
  SampledFunction on(MeasurePtr measure) const;
};

/// The Jacobi function phi_lambda(x) = 2F1((rho+lambda)/2, (rho-lambda)/2; (beta+1)/2; -sinh^2 x).
Complex phi(const RootDatum& datum, Complex lambda, double x);

/// phi_lambda at every node of a non-decreasing list of radii, in one sweep.
std::vector<Complex> phi_sweep(const RootDatum& datum, Complex lambda, std::span<const double> x,
                               LargeArgumentRoute route = LargeArgumentRoute::Connection);

/// Plancherel measure d nu = kappa |c(i xi)|^{-2} d xi on a spectral grid.
MeasurePtr nu_measure(const RootDatum& datum, std::shared_ptr<const RadialGrid> spectral);

/// Half-width eps_p rho of the tube C(eps_p rho), eps_p = 2/p - 1.
double tube_bound(const RootDatum& datum, double p);

/// Throws ConfigError unless |eta| < eps_p rho. At p = 2 only eta = 0 passes.
void validate_tube(const RootDatum& datum, double p, double eta);

/// Forward transform of every member of `family` (all on the same mu measure) at
/// i xi + eta for xi on `spectral`. One kernel sweep per spectral node serves the
/// whole family; spectral nodes are distributed over OpenMP threads.
std::vector<SpectralFunction> ho_transform(const RootDatum& datum, const std::vector<SampledFunction>& family,
                                           std::shared_ptr<const RadialGrid> spectral, double eta = 0.0);
SpectralFunction ho_transform(const RootDatum& datum, const SampledFunction& f,
                              std::shared_ptr<const RadialGrid> spectral, double eta = 0.0);

/// Inverse transform against d nu onto the grid of `target` (a mu measure).
/// Requires eta = 0 and a calibrated datum. Throws AccuracyError when |g| on the last
/// tenth of the spectral grid exceeds 1e-8 of its maximum.
std::vector<SampledFunction> ho_inverse(const RootDatum& datum, const std::vector<SpectralFunction>& family,
                                        MeasurePtr target);
SampledFunction ho_inverse(const RootDatum& datum, const SpectralFunction& g, MeasurePtr target);

/// Serial per-point reference implementations, used by tests and benchmarks.
SpectralFunction ho_transform_reference(const RootDatum& datum, const SampledFunction& f,
                                        std::shared_ptr<const RadialGrid> spectral, double eta = 0.0);
SampledFunction ho_inverse_reference(const RootDatum& datum, const SpectralFunction& g, MeasurePtr target);

/// Calibrate kappa so that ||F f0||_{L2(nu)} = ||f0||_{L2(mu)}.
RootDatum calibrate_kappa(const RootDatum& datum, const SampledFunction& f0,
                          std::shared_ptr<const RadialGrid> spectral);

/// Flat kernel psi(xi, x) = j_nu(xi x), nu = (m_alpha + m_2alpha - 1)/2.
double flat_psi(const RootDatum& datum, double xi, double x);

/// phi_{i xi/eps}(eps x).
Complex eps_contraction(const RootDatum& datum, double eps, double xi, double x);

/// Hankel-type transform int f(x) j_nu(xi x) d measure(x) of a radial function.
SpectralFunction hankel_transform(double nu, const SampledFunction& f, std::shared_ptr<const RadialGrid> spectral);
/// Batched version: one kernel evaluation per (xi, x) pair serves the whole family.
std::vector<SpectralFunction> hankel_transform(double nu, const std::vector<SampledFunction>& family,
                                               std::shared_ptr<const RadialGrid> spectral);

/// Flat transform F_0 f = int f psi d mu0 of a radial function (rank one).
SpectralFunction flat_transform(const RootDatum& datum, const SampledFunction& f,
                                std::shared_ptr<const RadialGrid> spectral);

/// Flat transform of a tensor product f = prod_i f_i(x_i) on Z_2^n: one factor
/// transform per axis. factors[i] must live on |x|^{m_i} dx.
std::vector<SpectralFunction> flat_transform(const RootDatum& datum, const std::vector<SampledFunction>& factors,
                                             std::shared_ptr<const RadialGrid> spectral);

/// Radial measure |x|^{m} dx for one axis of the flat weight.
MeasurePtr axis_measure(double m, std::shared_ptr<const RadialGrid> grid, const std::string& label = "mu0_axis");

/// Calibrate kappa0 so that the flat transform is an isometry on tensor inputs
/// (one factor per axis; a single factor in rank one).
RootDatum calibrate_flat_kappa(const RootDatum& datum, const std::vector<SampledFunction>& factors,
                               std::shared_ptr<const RadialGrid> spectral);

}  // namespace hoft
