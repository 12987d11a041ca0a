// Straightforward double loops over (xi, x) with one independent kernel
// evaluation per point. Slow; kept as the baseline for tests and benchmarks.

#include "hoft/errors.hpp"
#include "hoft/transforms.hpp"

namespace hoft {

SpectralFunction ho_transform_reference(const RootDatum& datum, const SampledFunction& f,
                                        std::shared_ptr<const RadialGrid> spectral, double eta) {
  if (!f.measure || f.measure->dimension() != 1) throw DomainError("ho_transform_reference: radial input required");
  const auto& x = f.measure->grid().nodes();
  const auto& m = f.measure->masses();
  SpectralFunction out;
  out.id = f.id;
  out.grid = spectral;
  out.eta = eta;
  for (double xi : spectral->nodes()) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (f.values[i] == 0.0 || m[i] == 0.0) continue;
      sum += f.values[i] * m[i] * phi(datum, Complex(eta, xi), x[i]);
    }
    out.values.push_back(sum);
  }
  return out;
}

SampledFunction ho_inverse_reference(const RootDatum& datum, const SpectralFunction& g, MeasurePtr target) {
  const auto& xi = g.grid->nodes();
  const auto& w = g.grid->weights();
  SampledFunction out;
  out.id = g.id;
  out.measure = target;
  for (double x : target->grid().nodes()) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j)
      sum += g.values[j] * phi(datum, Complex(0.0, xi[j]), x) * plancherel_density(datum, xi[j]) * w[j];
    out.values.push_back(sum);
  }
  return out;
}

}  // namespace hoft
