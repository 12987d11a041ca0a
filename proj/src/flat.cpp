#include <cmath>

#include "hoft/errors.hpp"
#include "hoft/transforms.hpp"

namespace hoft {

double flat_psi(const RootDatum& datum, double xi, double x) {
  if (!(x >= 0.0) || !(xi >= 0.0)) throw DomainError("flat_psi: negative argument");
  return bessel_j_normalized(datum.bessel_index(), xi * x);
}

MeasurePtr axis_measure(double m, std::shared_ptr<const RadialGrid> grid, const std::string& label) {
  std::vector<double> density;
  density.reserve(grid->size());
  for (double x : grid->nodes()) density.push_back(std::pow(x, m));
  return std::make_shared<WeightedMeasure>(label, std::move(grid), std::move(density));
}

std::vector<SpectralFunction> hankel_transform(double nu, const std::vector<SampledFunction>& family,
                                               std::shared_ptr<const RadialGrid> spectral) {
  if (nu < -0.5) throw DomainError("hankel_transform: order below -1/2");
  std::vector<SpectralFunction> out;
  if (family.empty()) return out;
  const RadialGrid& grid = family.front().measure->grid();
  for (const auto& f : family) {
    if (!f.measure || f.measure->dimension() != 1) throw DomainError("hankel_transform: radial input required");
    if (f.measure->grid().nodes() != grid.nodes() || f.values.size() != grid.size())
      throw DomainError("hankel_transform: family members must share one grid");
  }
  const auto& x = grid.nodes();
  const std::size_t members = family.size();
  // nodes where some member carries mass, with the weighted values member-major
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (const auto& f : family) {
      if (f.values[i] * f.measure->masses()[i] != 0.0) {
        live.push_back(i);
        break;
      }
    }
  }
  std::vector<Complex> weighted(live.size() * members);
  for (std::size_t k = 0; k < live.size(); ++k)
    for (std::size_t f = 0; f < members; ++f)
      weighted[k * members + f] = family[f].values[live[k]] * family[f].measure->masses()[live[k]];

  const auto& xi = spectral->nodes();
  std::vector<Complex> result(xi.size() * members, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(xi.size()); ++j) {
    std::vector<Complex> sum(members, 0.0);
    for (std::size_t k = 0; k < live.size(); ++k) {
      const double kernel = bessel_j_normalized(nu, xi[j] * x[live[k]]);
      for (std::size_t f = 0; f < members; ++f) sum[f] += weighted[k * members + f] * kernel;
    }
    for (std::size_t f = 0; f < members; ++f) result[j * members + f] = sum[f];
  }
  for (std::size_t f = 0; f < members; ++f) {
    SpectralFunction g;
    g.id = family[f].id;
    g.grid = spectral;
    g.values.resize(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j) g.values[j] = result[j * members + f];
    out.push_back(std::move(g));
  }
  return out;
}

SpectralFunction hankel_transform(double nu, const SampledFunction& f, std::shared_ptr<const RadialGrid> spectral) {
  return hankel_transform(nu, std::vector<SampledFunction>{f}, std::move(spectral)).front();
}

SpectralFunction flat_transform(const RootDatum& datum, const SampledFunction& f,
                                std::shared_ptr<const RadialGrid> spectral) {
  if (!datum.is_rank_one()) throw ConfigError("flat_transform: rank >= 2 inputs must be given as tensor factors");
  return hankel_transform(datum.bessel_index(), f, std::move(spectral));
}

std::vector<SpectralFunction> flat_transform(const RootDatum& datum, const std::vector<SampledFunction>& factors,
                                             std::shared_ptr<const RadialGrid> spectral) {
  const std::size_t axes = datum.is_rank_one() ? 1 : datum.multiplicities().size();
  if (factors.size() != axes) throw ConfigError("flat_transform: need exactly one factor per axis");
  std::vector<SpectralFunction> out;
  for (std::size_t a = 0; a < axes; ++a) out.push_back(hankel_transform(datum.axis_bessel_index(a), factors[a], spectral));
  return out;
}

RootDatum calibrate_flat_kappa(const RootDatum& datum, const std::vector<SampledFunction>& factors,
                               std::shared_ptr<const RadialGrid> spectral) {
  const auto transformed = flat_transform(datum, factors, spectral);
  double kappa0 = 1.0;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    const double m = datum.is_rank_one() ? datum.beta() : datum.multiplicities()[a];
    double spectral_norm = 0.0;
    for (std::size_t j = 0; j < spectral->size(); ++j) {
      const double v = std::abs(transformed[a].values[j]);
      spectral_norm += v * v * std::pow(spectral->nodes()[j], m) * spectral->weights()[j];
    }
    const double l2 = lp_norm(factors[a], 2.0);
    if (!(spectral_norm > 0.0)) throw AccuracyError("calibrate_flat_kappa: reference transform vanishes", 0.0);
    kappa0 *= l2 * l2 / spectral_norm;
  }
  return datum.with_flat_kappa(kappa0);
}

}  // namespace hoft
