#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "hoft/harness.hpp"
#include "hoft/transforms.hpp"

namespace {

struct Fixture {
  hoft::RootDatum datum = hoft::RootDatum::rank_one(1.0, 0.0);
  std::shared_ptr<const hoft::RadialGrid> x;
  std::shared_ptr<const hoft::RadialGrid> spectral;
  std::vector<hoft::SampledFunction> family;

  explicit Fixture(int order) {
    hoft::GridOptions xg;
    xg.x_max = 12.0;
    xg.order = 32;
    x = std::make_shared<const hoft::RadialGrid>(xg);
    hoft::GridOptions s = hoft::HarnessSettings::default_spectral_grid();
    s.order = order;
    spectral = std::make_shared<const hoft::RadialGrid>(s);
    auto mu = hoft::mu_measure(datum, x);
    for (const auto& spec : hoft::default_family()) {
      hoft::TestFunctionSpec resolved = spec;
      if (resolved.family == hoft::TestFamily::CoshPower && resolved.sigma <= 0.0) resolved.sigma = 2.0 * datum.rho() + 2.0;
      family.push_back(hoft::make_test_function(resolved, mu));
    }
  }
};

const Fixture& fixture(int order) {
  static Fixture f8(8), f16(16), f32(32);
  return order == 8 ? f8 : order == 16 ? f16 : f32;
}

// Serial reference: one pointwise kernel evaluation per (xi, x) and per function.
void BM_TransformSerial(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& g : f.family) benchmark::DoNotOptimize(hoft::ho_transform_reference(f.datum, g, f.spectral));
  }
  state.counters["spectral_nodes"] = static_cast<double>(f.spectral->size());
}

// One kernel sweep per xi serves the whole family; xi nodes split over OpenMP threads.
void BM_TransformParallel(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hoft::ho_transform(f.datum, f.family, f.spectral));
  state.counters["spectral_nodes"] = static_cast<double>(f.spectral->size());
}

BENCHMARK(BM_TransformSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
