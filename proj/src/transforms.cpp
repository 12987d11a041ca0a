#include "hoft/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hoft/errors.hpp"

namespace hoft {
namespace {

struct JacobiParameters {
  Complex a, b, c;
};

JacobiParameters jacobi_parameters(const RootDatum& datum, Complex lambda) {
  const double rho = datum.rho();
  return {0.5 * (rho + lambda), 0.5 * (rho - lambda), Complex(0.5 * (datum.beta() + 1.0))};
}

const RadialGrid& common_grid(const std::vector<SampledFunction>& family) {
  const RadialGrid& grid = family.front().measure->grid();
  for (const auto& f : family) {
    if (!f.measure || f.measure->dimension() != 1) throw DomainError("transform: radial inputs required");
    if (&f.measure->grid() != &grid && f.measure->grid().nodes() != grid.nodes())
      throw DomainError("transform: family members must share one grid");
    if (f.values.size() != grid.size()) throw DomainError("transform: function size does not match grid");
  }
  return grid;
}

// Index past which every member's remaining |f| mass is below 1e-17 of its total.
// Since |phi| <= 1 on the tube, dropping those nodes changes no output by more.
std::size_t effective_support(const std::vector<SampledFunction>& family) {
  std::size_t end = 0;
  for (const auto& f : family) {
    const auto& m = f.measure->masses();
    double total = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) total += std::abs(f.values[i]) * m[i];
    double tail = 0.0;
    std::size_t k = m.size();
    while (k > 0) {
      const double next = tail + std::abs(f.values[k - 1]) * m[k - 1];
      if (next > 1e-17 * total) break;
      tail = next;
      --k;
    }
    end = std::max(end, k);
  }
  return end;
}

}  // namespace

SampledFunction SpectralFunction::on(MeasurePtr measure) const {
  if (!measure || measure->dimension() != 1 || measure->size() != values.size())
    throw DomainError("SpectralFunction::on: measure does not match the spectral grid");
  return SampledFunction{id, std::move(measure), values};
}

Complex phi(const RootDatum& datum, Complex lambda, double x) {
  if (!(x >= 0.0)) throw DomainError("phi: negative radius");
  const auto p = jacobi_parameters(datum, lambda);
  const double s = std::sinh(x);
  return gauss_2f1(p.a, p.b, p.c, -s * s);
}

std::vector<Complex> phi_sweep(const RootDatum& datum, Complex lambda, std::span<const double> x,
                               LargeArgumentRoute route) {
  const auto p = jacobi_parameters(datum, lambda);
  return gauss_2f1_sinh_sweep(p.a, p.b, p.c, x, route);
}

MeasurePtr nu_measure(const RootDatum& datum, std::shared_ptr<const RadialGrid> spectral) {
  std::vector<double> density;
  density.reserve(spectral->size());
  for (double xi : spectral->nodes()) density.push_back(plancherel_density(datum, xi));
  return std::make_shared<WeightedMeasure>("nu_plancherel", std::move(spectral), std::move(density));
}

double tube_bound(const RootDatum& datum, double p) {
  if (!(p > 0.0 && p <= 2.0)) throw ConfigError("tube: p must lie in (0, 2]");
  return (2.0 / p - 1.0) * datum.rho();
}

void validate_tube(const RootDatum& datum, double p, double eta) {
  const double bound = tube_bound(datum, p);
  if (eta == 0.0) return;
  if (!(std::abs(eta) < bound)) {
    std::ostringstream msg;
    msg << "shift eta = " << eta << " lies outside the tube |eta| < eps_p*rho = " << bound << " (p = " << p
        << ", rho = " << datum.rho() << ")";
    throw ConfigError(msg.str());
  }
}

std::vector<SpectralFunction> ho_transform(const RootDatum& datum, const std::vector<SampledFunction>& family,
                                           std::shared_ptr<const RadialGrid> spectral, double eta) {
  if (family.empty()) return {};
  if (std::abs(eta) > datum.rho()) throw DomainError("ho_transform: |eta| exceeds rho, the kernel is unbounded");
  const RadialGrid& grid = common_grid(family);
  const std::size_t support = effective_support(family);
  const std::span<const double> nodes(grid.nodes().data(), support);
  const std::size_t tail_start =
      std::lower_bound(grid.nodes().begin(), grid.nodes().end(), grid.x_max() - 1.0) - grid.nodes().begin();

  // f(x_i) * mass_i, laid out function-major
  const std::size_t nf = family.size();
  std::vector<Complex> weighted(nf * support);
  for (std::size_t k = 0; k < nf; ++k) {
    const auto& m = family[k].measure->masses();
    for (std::size_t i = 0; i < support; ++i) weighted[k * support + i] = family[k].values[i] * m[i];
  }

  const std::size_t ns = spectral->size();
  std::vector<SpectralFunction> out(nf);
  for (std::size_t k = 0; k < nf; ++k) {
    out[k].id = family[k].id;
    out[k].grid = spectral;
    out[k].eta = eta;
    out[k].values.assign(ns, 0.0);
  }
  std::vector<double> tail(nf * ns, 0.0);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ns); ++j) {
    const Complex lambda(eta, spectral->nodes()[j]);
    const std::vector<Complex> kernel = phi_sweep(datum, lambda, nodes);
    for (std::size_t k = 0; k < nf; ++k) {
      const Complex* w = &weighted[k * support];
      Complex sum = 0.0;
      Complex tail_sum = 0.0;
      for (std::size_t i = 0; i < support; ++i) {
        const Complex term = w[i] * kernel[i];
        sum += term;
        if (i >= tail_start) tail_sum += term;
      }
      out[k].values[j] = sum;
      tail[k * ns + j] = std::abs(tail_sum);
    }
  }

  for (std::size_t k = 0; k < nf; ++k) {
    double peak = 0.0, worst_tail = 0.0;
    for (std::size_t j = 0; j < ns; ++j) {
      peak = std::max(peak, std::abs(out[k].values[j]));
      worst_tail = std::max(worst_tail, tail[k * ns + j]);
    }
    if (peak > 0.0 && worst_tail > 1e-6 * peak) {
      std::ostringstream msg;
      msg << "quadrature tail of '" << out[k].id << "' reaches " << worst_tail / peak << " of the peak transform value";
      out[k].warnings.push_back(msg.str());
    }
  }
  return out;
}

SpectralFunction ho_transform(const RootDatum& datum, const SampledFunction& f,
                              std::shared_ptr<const RadialGrid> spectral, double eta) {
  return ho_transform(datum, std::vector<SampledFunction>{f}, std::move(spectral), eta).front();
}

namespace {

void check_spectral_decay(const SpectralFunction& g) {
  const auto& xi = g.grid->nodes();
  const double cut = 0.9 * g.grid->x_max();
  double peak = 0.0, last = 0.0;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const double a = std::abs(g.values[j]);
    peak = std::max(peak, a);
    if (xi[j] >= cut) last = std::max(last, a);
  }
  if (peak > 0.0 && last > 1e-8 * peak) {
    std::ostringstream msg;
    msg << "ho_inverse: '" << g.id << "' has not decayed on the last tenth of the spectral grid (" << last / peak
        << " of its maximum); increase Lambda_max";
    throw AccuracyError(msg.str(), last / peak);
  }
}

}  // namespace

std::vector<SampledFunction> ho_inverse(const RootDatum& datum, const std::vector<SpectralFunction>& family,
                                        MeasurePtr target) {
  if (family.empty()) return {};
  if (!target || target->dimension() != 1) throw DomainError("ho_inverse: radial target measure required");
  const auto spectral = family.front().grid;
  for (const auto& g : family) {
    if (g.eta != 0.0) throw DomainError("ho_inverse: only the unshifted transform can be inverted");
    if (g.grid->nodes() != spectral->nodes()) throw DomainError("ho_inverse: family members must share one grid");
    check_spectral_decay(g);
  }
  const auto& x = target->grid().nodes();
  const std::size_t nx = x.size();
  const std::size_t nf = family.size();
  const std::size_t ns = spectral->size();

  std::vector<double> dnu(ns);
  for (std::size_t j = 0; j < ns; ++j) dnu[j] = spectral->weights()[j] * plancherel_density(datum, spectral->nodes()[j]);

  // Fixed chunks of spectral nodes, summed in chunk order, so the result does
  // not depend on the thread count.
  constexpr std::size_t kChunk = 32;
  const std::size_t chunks = (ns + kChunk - 1) / kChunk;
  std::vector<Complex> partial(chunks * nf * nx, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    Complex* acc = &partial[static_cast<std::size_t>(c) * nf * nx];
    const std::size_t j_end = std::min(ns, (static_cast<std::size_t>(c) + 1) * kChunk);
    for (std::size_t j = static_cast<std::size_t>(c) * kChunk; j < j_end; ++j) {
      // phi_{-i xi} = phi_{i xi}
      const std::vector<Complex> kernel = phi_sweep(datum, Complex(0.0, spectral->nodes()[j]), x);
      for (std::size_t k = 0; k < nf; ++k) {
        const Complex gk = family[k].values[j] * dnu[j];
        Complex* row = acc + k * nx;
        for (std::size_t i = 0; i < nx; ++i) row[i] += gk * kernel[i];
      }
    }
  }

  std::vector<SampledFunction> out(nf);
  for (std::size_t k = 0; k < nf; ++k) {
    out[k].id = family[k].id;
    out[k].measure = target;
    out[k].values.assign(nx, 0.0);
    for (std::size_t c = 0; c < chunks; ++c) {
      const Complex* row = &partial[(c * nf + k) * nx];
      for (std::size_t i = 0; i < nx; ++i) out[k].values[i] += row[i];
    }
  }
  return out;
}

SampledFunction ho_inverse(const RootDatum& datum, const SpectralFunction& g, MeasurePtr target) {
  return ho_inverse(datum, std::vector<SpectralFunction>{g}, std::move(target)).front();
}

RootDatum calibrate_kappa(const RootDatum& datum, const SampledFunction& f0,
                          std::shared_ptr<const RadialGrid> spectral) {
  const SpectralFunction g = ho_transform(datum, f0, spectral);
  double spectral_norm = 0.0;
  for (std::size_t j = 0; j < spectral->size(); ++j) {
    const double a = std::abs(g.values[j]);
    spectral_norm += a * a * inverse_c_squared(datum, spectral->nodes()[j]) * spectral->weights()[j];
  }
  const double l2 = lp_norm(f0, 2.0);
  if (!(spectral_norm > 0.0)) throw AccuracyError("calibrate_kappa: reference transform vanishes", 0.0);
  return datum.with_kappa(l2 * l2 / spectral_norm);
}

Complex eps_contraction(const RootDatum& datum, double eps, double xi, double x) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("eps_contraction: eps must lie in (0, 1]");
  return phi(datum, Complex(0.0, xi / eps), eps * x);
}

}  // namespace hoft
