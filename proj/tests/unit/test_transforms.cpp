#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hoft/errors.hpp"
#include "hoft/transforms.hpp"
#include "oracles.hpp"

using hoft::Complex;
using hoft::RootDatum;

namespace {

std::shared_ptr<const hoft::RadialGrid> grid(double x_max, int order) {
  hoft::GridOptions g;
  g.x_max = x_max;
  g.order = order;
  return std::make_shared<const hoft::RadialGrid>(g);
}

hoft::SampledFunction sample(hoft::MeasurePtr m, double (*f)(double)) {
  hoft::SampledFunction s{"f", m, {}};
  for (double x : m->grid().nodes()) s.values.emplace_back(f(x));
  return s;
}

double gauss(double x) { return std::exp(-x * x); }

}  // namespace

TEST_CASE("phi against mpmath") {
  struct Case {
    double ma, m2a;
    Complex value;  // phi_{0.2 + 1.3 i}(2.5)
  };
  const Case cases[] = {{1.0, 0.0, {-0.2370761655736107561, 0.08870612928776493685}},
                        {0.5, 0.3, {-0.2413305745882331143, 0.07523084853114843254}},
                        {2.0, 1.0, {0.01114961339211338130, 0.01501453319682335277}}};
  for (const auto& c : cases) CHECK(std::abs(hoft::phi(RootDatum::rank_one(c.ma, c.m2a), {0.2, 1.3}, 2.5) - c.value) < 1e-12);
}

TEST_CASE("phi against the ODE oracle") {
  for (auto [ma, m2a] : std::initializer_list<std::pair<double, double>>{{1.0, 0.0}, {2.0, 1.0}, {0.5, 0.3}, {3.0, 0.5}}) {
    const auto d = RootDatum::rank_one(ma, m2a);
    for (Complex l : {Complex(0.0, 1.0), Complex(0.5 * d.rho(), 3.0), Complex(0.1, 0.0)})
      for (double x : {0.5, 2.0, 4.0}) {
        const Complex ode = oracle::jacobi_ode(ma, m2a, l, x);
        CHECK(std::abs(hoft::phi(d, l, x) - ode) < 1e-8 * std::max(1.0, std::abs(ode)));
      }
  }
}

TEST_CASE("phi closed form for m = (2, 0)") {
  const auto d = RootDatum::rank_one(2.0, 0.0);
  for (double xi : {0.5, 1.0, 5.0, 12.0})
    for (double t : {0.01, 0.7, 3.0, 9.0})
      CHECK(std::abs(hoft::phi(d, {0.0, xi}, t) - std::sin(xi * t) / (xi * std::sinh(t))) < 1e-9);
}

TEST_CASE("property: phi is normalized, even in lambda and bounded on the tube") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> m(0.1, 3.0), u(-1.0, 1.0), xi(0.0, 10.0), x(0.0, 8.0);
  for (int i = 0; i < 60; ++i) {
    const auto d = RootDatum::rank_one(m(rng), m(rng));
    const Complex l(u(rng) * d.rho(), xi(rng));
    const double t = x(rng);
    CHECK(std::abs(hoft::phi(d, l, 0.0) - 1.0) < 1e-14);
    CHECK(std::abs(hoft::phi(d, l, t) - hoft::phi(d, -l, t)) < 1e-10);
    CHECK(std::abs(hoft::phi(d, l, t)) <= 1.0 + 1e-8);
  }
}

TEST_CASE("phi sweep equals pointwise phi") {
  const auto d = RootDatum::rank_one(1.0, 0.0);
  std::vector<double> xs;
  for (int i = 0; i <= 60; ++i) xs.push_back(0.2 * i);
  const Complex l(0.1, 2.3);
  const auto sweep = hoft::phi_sweep(d, l, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(sweep[i] - hoft::phi(d, l, xs[i])) < 1e-9);
}

TEST_CASE("flat kernel and eps contraction") {
  const auto d = RootDatum::rank_one(1.0, 0.0);  // nu = 0
  for (double t : {0.0, 0.5, 2.0, 5.0}) CHECK(hoft::flat_psi(d, 1.0, t) == doctest::Approx(oracle::bessel_series_normalized(0.0, t)));
  const auto d2 = RootDatum::rank_one(2.0, 0.0);
  for (double t : {0.1, 1.0, 4.0}) CHECK(std::abs(hoft::flat_psi(d2, 1.3, t) - std::sin(1.3 * t) / (1.3 * t)) < 1e-12);
  double last = 1e9;
  for (double eps : {0.2, 0.1, 0.05, 0.02}) {
    double err = 0.0;
    for (int i = 0; i <= 50; ++i) err = std::max(err, std::abs(hoft::eps_contraction(d, eps, 1.0, 0.1 * i) - hoft::flat_psi(d, 1.0, 0.1 * i)));
    CHECK(err <= last);
    last = err;
  }
  CHECK(last < 0.05);
  CHECK_THROWS_AS(hoft::eps_contraction(d, 0.0, 1.0, 1.0), hoft::DomainError);
}

TEST_CASE("transform of a gaussian for m = (2, 0) in closed form") {
  // F f(xi) = (4/xi) int_0^inf e^{-t^2} sinh t sin(xi t) dt = (2 sqrt(pi)/xi) e^{(1 - xi^2)/4} sin(xi/2)
  const auto d = RootDatum::rank_one(2.0, 0.0);
  const auto mu = hoft::mu_measure(d, grid(12.0, 48));
  const auto spectral = grid(20.0, 24);
  const auto hat = hoft::ho_transform(d, sample(mu, gauss), spectral);
  const auto& nodes = spectral->nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double xi = nodes[i];
    const double exact = 2.0 * std::sqrt(std::numbers::pi) / xi * std::exp(0.25 * (1.0 - xi * xi)) * std::sin(0.5 * xi);
    CHECK(std::abs(hat.values[i] - exact) < 1e-10);
  }
}

TEST_CASE("parallel transform matches the serial reference") {
  const auto d = RootDatum::rank_one(0.5, 0.3);
  const auto mu = hoft::mu_measure(d, grid(10.0, 16));
  const auto spectral = grid(20.0, 8);
  std::vector<hoft::SampledFunction> family = {sample(mu, gauss), sample(mu, [](double x) { return std::exp(-2.0 * x * x) * (1 + x); })};
  for (double eta : {0.0, 0.2}) {
    const auto batch = hoft::ho_transform(d, family, spectral, eta);
    for (std::size_t k = 0; k < family.size(); ++k) {
      const auto ref = hoft::ho_transform_reference(d, family[k], spectral, eta);
      for (std::size_t i = 0; i < ref.values.size(); ++i) CHECK(std::abs(batch[k].values[i] - ref.values[i]) < 1e-11);
    }
  }
}

TEST_CASE("calibrated kappa, Plancherel and inversion roundtrip") {
  for (auto [ma, m2a] : std::initializer_list<std::pair<double, double>>{{2.0, 0.0}, {1.0, 0.0}}) {
    const auto raw = RootDatum::rank_one(ma, m2a);
    const auto mu = hoft::mu_measure(raw, grid(12.0, 48));
    const auto spectral = grid(40.0, 32);
    const auto f0 = sample(mu, gauss);
    const auto d = hoft::calibrate_kappa(raw, f0, spectral);
    CHECK(d.kappa() == doctest::Approx(0.5 / std::numbers::pi).epsilon(1e-6));

    // even in x, so its transform decays like a gaussian
    const auto g = sample(mu, [](double x) {
      return std::exp(-0.5 * (x - 1.5) * (x - 1.5) / 0.36) + std::exp(-0.5 * (x + 1.5) * (x + 1.5) / 0.36);
    });
    const auto hat = hoft::ho_transform(d, g, spectral);
    const double ratio = hoft::lp_norm(hat.on(hoft::nu_measure(d, spectral)), 2.0) / hoft::lp_norm(g, 2.0);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-6));

    const auto back = hoft::ho_inverse(d, hat, mu);
    hoft::SampledFunction diff = g;
    for (std::size_t i = 0; i < diff.size(); ++i) diff.values[i] -= back.values[i];
    CHECK(hoft::lp_norm(diff, 2.0) / hoft::lp_norm(g, 2.0) < 1e-6);

    // the serial reference on a coarse target grid
    hoft::GridOptions coarse;
    coarse.x_max = 4.0;
    coarse.order = 8;
    coarse.grading_levels = 1;
    const auto target = hoft::mu_measure(d, std::make_shared<const hoft::RadialGrid>(coarse));
    const auto ref = hoft::ho_inverse_reference(d, hat, target);
    const auto fast = hoft::ho_inverse(d, hat, target);
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(ref.values[i] - fast.values[i]) < 1e-10);
  }
}

TEST_CASE("Hankel transform of a gaussian") {
  // int e^{-x^2} j_nu(xi x) x^{2 nu + 1} dx = Gamma(nu + 1) e^{-xi^2/4} / 2
  for (double nu : {0.0, 0.5, 1.3}) {
    const auto m = hoft::axis_measure(2.0 * nu + 1.0, grid(10.0, 48));
    const auto spectral = grid(15.0, 16);
    const auto hat = hoft::hankel_transform(nu, sample(m, gauss), spectral);
    for (std::size_t i = 0; i < spectral->size(); ++i) {
      const double xi = spectral->nodes()[i];
      CHECK(std::abs(hat.values[i] - 0.5 * std::tgamma(nu + 1.0) * std::exp(-0.25 * xi * xi)) < 1e-11);
    }
  }
}

TEST_CASE("tube validation") {
  const auto d = RootDatum::rank_one(1.0, 0.0);
  CHECK(hoft::tube_bound(d, 1.5) == doctest::Approx((2.0 / 1.5 - 1.0) * 0.5));
  CHECK_NOTHROW(hoft::validate_tube(d, 1.5, 0.1));
  CHECK_THROWS_AS(hoft::validate_tube(d, 1.5, 0.2), hoft::ConfigError);
  CHECK_THROWS_AS(hoft::validate_tube(d, 2.0, 0.01), hoft::ConfigError);
  try {
    hoft::validate_tube(d, 1.5, 0.3);
  } catch (const hoft::ConfigError& e) {
    CHECK(std::string(e.what()).find("eps_p*rho") != std::string::npos);
  }
}
