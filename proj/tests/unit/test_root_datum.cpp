#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hoft/errors.hpp"
#include "hoft/root_datum.hpp"

using hoft::Complex;
using hoft::RootDatum;

TEST_CASE("rank-one datum constants") {
  const auto d = RootDatum::rank_one(2.0, 1.0);
  CHECK(d.is_rank_one());
  CHECK(d.rank() == 1);
  CHECK(d.rho() == doctest::Approx(2.0));
  CHECK(d.beta() == doctest::Approx(3.0));
  CHECK(d.bessel_index() == doctest::Approx(1.0));
  CHECK(d.describe() == "rank_one(m_alpha=2, m_2alpha=1)");
}

TEST_CASE("invalid multiplicities are rejected") {
  CHECK_THROWS_AS(RootDatum::rank_one(-1.0, 0.0), hoft::DomainError);
  CHECK_THROWS_AS(RootDatum::rank_one(0.0, 0.0), hoft::DomainError);
  CHECK_THROWS_AS(RootDatum::flat_product({}), hoft::DomainError);
  CHECK_THROWS_AS(RootDatum::flat_product({1.0, 0.0}), hoft::DomainError);
}

TEST_CASE("flat product datum") {
  const auto d = RootDatum::flat_product({1.0, 2.0});
  CHECK_FALSE(d.is_rank_one());
  CHECK(d.rank() == 2);
  CHECK(d.beta() == doctest::Approx(3.0));
  CHECK(d.flat_rho() == doctest::Approx(1.5));
  CHECK(d.axis_bessel_index(1) == doctest::Approx(0.5));
  const double x[] = {2.0, 3.0};
  CHECK(hoft::dunkl_weight(d, x) == doctest::Approx(2.0 * 9.0));
  CHECK_THROWS_AS(d.rho(), hoft::DomainError);
}

TEST_CASE("density J") {
  for (double x : {0.1, 1.0, 3.0}) {
    CHECK(hoft::density_J(RootDatum::rank_one(1.0, 0.0), x) == doctest::Approx(2.0 * std::sinh(x)));
    CHECK(hoft::density_J(RootDatum::rank_one(2.0, 1.0), x) ==
          doctest::Approx(4.0 * std::sinh(x) * std::sinh(x) * 2.0 * std::sinh(2.0 * x)));
  }
}

TEST_CASE("c-function normalization and values") {
  struct Case {
    double ma, m2a;
    Complex c;                 // c(0.3 + 1.7 i), mpmath
    double icc[3];             // |c(i xi)|^{-2} at xi = 0.1, 1, 7, mpmath
  };
  const Case cases[] = {
      {1.0, 0.0, {0.3122819132928145049, -0.3029965687087940689}, {0.09557233566760522658, 3.129881035631758565, 21.99114857512855267}},
      {0.5, 0.3, {0.3743568557734717010, -0.2956789064389260405}, {0.08790902375292597353, 2.899071666737300676, 13.99148271041039096}},
      {2.0, 1.0, {-0.4982317762118083727, -1.266857874723653810}, {6.301319831297137618e-4, 0.1070430359349779847, 33.67394627461910124}},
  };
  for (const auto& k : cases) {
    const auto d = RootDatum::rank_one(k.ma, k.m2a);
    CHECK(std::abs(hoft::c_function(d, d.rho()) - 1.0) < 1e-12);
    CHECK(std::abs(hoft::c_function(d, {0.3, 1.7}) - k.c) < 1e-12);
    const double xis[] = {0.1, 1.0, 7.0};
    for (int i = 0; i < 3; ++i) CHECK(hoft::inverse_c_squared(d, xis[i]) == doctest::Approx(k.icc[i]).epsilon(1e-12));
  }
}

TEST_CASE("c-function for m = (2, 0) is 1/lambda") {
  const auto d = RootDatum::rank_one(2.0, 0.0);
  for (Complex l : {Complex(0.5, 0.0), Complex(0.3, 1.7), Complex(2.0, -4.0)}) CHECK(std::abs(hoft::c_function(d, l) - 1.0 / l) < 1e-13);
  for (double xi : {0.01, 1.0, 30.0}) CHECK(hoft::inverse_c_squared(d, xi) == doctest::Approx(xi * xi).epsilon(1e-12));
}

TEST_CASE("property: conjugate symmetry and evenness of |c|^{-2}") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> m(0.05, 4.0), re(0.05, 3.0), im(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    const auto d = RootDatum::rank_one(m(rng), m(rng));
    const Complex l(re(rng), im(rng));
    CHECK(std::abs(hoft::c_function(d, std::conj(l)) - std::conj(hoft::c_function(d, l))) <= 1e-12 * std::abs(hoft::c_function(d, l)));
    const double xi = std::abs(im(rng));
    CHECK(hoft::inverse_c_squared(d, xi) == doctest::Approx(hoft::inverse_c_squared(d, -xi)).epsilon(1e-14));
    CHECK(hoft::inverse_c_squared(d, xi) >= 0.0);
  }
}

TEST_CASE("Plancherel density needs a calibrated constant") {
  const auto d = RootDatum::rank_one(1.0, 0.0);
  CHECK_FALSE(d.has_kappa());
  CHECK_THROWS_AS(hoft::plancherel_density(d, 1.0), hoft::ConfigError);
  const auto k = d.with_kappa(0.25);
  CHECK(hoft::plancherel_density(k, 2.0) == doctest::Approx(0.25 * hoft::inverse_c_squared(d, 2.0)));
  CHECK_THROWS_AS(d.with_kappa(-1.0), hoft::DomainError);
  CHECK(hoft::kappa_closed_form(d) == doctest::Approx(0.5 / std::numbers::pi));
}

TEST_CASE("flat Plancherel constant closed form") {
  // nu = 1/2: 1 / (2 Gamma(3/2)^2) = 2/pi
  CHECK(hoft::flat_kappa_closed_form(RootDatum::rank_one(2.0, 0.0)) == doctest::Approx(2.0 / std::numbers::pi));
  // nu = 0 and nu = 1/2 axes
  CHECK(hoft::flat_kappa_closed_form(RootDatum::flat_product({1.0, 2.0})) == doctest::Approx(2.0 / std::numbers::pi));
}
