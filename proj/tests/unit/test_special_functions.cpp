#include <cmath>
#include <random>

#include "doctest.h"
#include "hoft/errors.hpp"
#include "hoft/special_functions.hpp"
#include "oracles.hpp"

using hoft::Complex;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// Compare log-gamma values modulo the 2 pi i branch ambiguity.
double log_gamma_distance(Complex a, Complex b) {
  const double d = std::remainder(a.imag() - b.imag(), 2.0 * M_PI);
  return std::hypot(a.real() - b.real(), d);
}

}  // namespace

TEST_CASE("log_gamma against mpmath") {
  CHECK(log_gamma_distance(hoft::log_gamma({0.5, 3.0}), {-3.793450450436223173, 0.3098192710864391661}) < 1e-13);
  CHECK(log_gamma_distance(hoft::log_gamma({-2.5, 0.7}), {-1.494187308911357506, -8.646475682803377345}) < 1e-12);
  CHECK(log_gamma_distance(hoft::log_gamma({10.0, -20.0}), {-1.702980443956511060, -52.66066042558471948}) < 1e-12);
}

TEST_CASE("log_gamma matches lgamma on the positive axis") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 31.3, 170.0}) CHECK(hoft::log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
}

TEST_CASE("log_gamma rejects poles") {
  CHECK_THROWS_AS(hoft::log_gamma(Complex(0.0, 0.0)), hoft::DomainError);
  CHECK_THROWS_AS(hoft::log_gamma(Complex(-3.0, 0.0)), hoft::DomainError);
}

TEST_CASE("property: log_gamma recurrence and reflection") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-6.0, 8.0), im(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Complex z(re(rng), im(rng));
    if (std::abs(z.imag()) < 1e-3) continue;
    // log Gamma(z+1) - log Gamma(z) = log z  (mod 2 pi i)
    CHECK(log_gamma_distance(hoft::log_gamma(z + 1.0) - hoft::log_gamma(z), std::log(z)) < 1e-11);
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const Complex lhs = hoft::log_gamma(z) + hoft::log_gamma(1.0 - z);
    CHECK(log_gamma_distance(lhs, std::log(M_PI / std::sin(M_PI * z))) < 1e-9);
  }
}

TEST_CASE("gauss_2f1 against mpmath") {
  CHECK(rel(hoft::gauss_2f1(0.5, 0.25, 1.5, -0.5), 0.9645460295154000427) < 1e-14);
  CHECK(rel(hoft::gauss_2f1({1.0, 2.0}, {1.0, -2.0}, 1.5, -4.0), -0.02722372728499115524) < 1e-10);
  const double s3 = std::sinh(3.0);
  CHECK(rel(hoft::gauss_2f1({0.75, 1.0}, {0.75, -1.0}, 1.2, -s3 * s3), 0.001513575751548419887) < 1e-9);
  const double s7 = std::sinh(7.0);
  CHECK(rel(hoft::gauss_2f1({1.4, 0.2}, {-0.1, -0.2}, 1.8, -s7 * s7), {-2.600717467104224619, 2.004181822770282459}) <
        1e-9);
}

TEST_CASE("gauss_2f1 elementary cases") {
  // 2F1(1, 1; 2; z) = -log(1 - z)/z
  for (double z : {-0.9, -0.3, -5.0, -200.0}) CHECK(rel(hoft::gauss_2f1(1.0, 1.0, 2.0, z), -std::log1p(-z) / z) < 1e-12);
  // 2F1(a, b; b; z) = (1 - z)^{-a}
  for (double z : {-0.5, -3.0, -30.0}) CHECK(rel(hoft::gauss_2f1({0.3, 0.4}, 1.7, 1.7, z), std::pow(1.0 - z, Complex(-0.3, -0.4))) < 1e-12);
}

TEST_CASE("gauss_2f1 domain errors") {
  CHECK_THROWS_AS(hoft::gauss_2f1(1.0, 1.0, -2.0, 0.5), hoft::DomainError);
  CHECK_THROWS_AS(hoft::gauss_2f1(1.0, 1.0, 2.0, 1.5), hoft::DomainError);
}

TEST_CASE("sinh sweep agrees with pointwise evaluation on both routes") {
  const Complex a(0.6, 1.1), b(0.6, -1.1), c(1.3, 0.0);
  std::vector<double> xs;
  for (int i = 0; i <= 40; ++i) xs.push_back(0.25 * i);
  for (auto route : {hoft::LargeArgumentRoute::Connection, hoft::LargeArgumentRoute::Ode}) {
    const auto sweep = hoft::gauss_2f1_sinh_sweep(a, b, c, xs, route);
    REQUIRE(sweep.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double s = std::sinh(xs[i]);
      CHECK(std::abs(sweep[i] - hoft::gauss_2f1(a, b, c, -s * s)) < 1e-8);
    }
  }
}

TEST_CASE("bessel_j against mpmath and the series oracle") {
  CHECK(hoft::bessel_j(0.0, 5.0) == doctest::Approx(-0.1775967713143383043).epsilon(1e-13));
  CHECK(hoft::bessel_j(1.5, 10.3) == doctest::Approx(0.1407872309737187276).epsilon(1e-12));
  CHECK(hoft::bessel_j(0.3, 0.01) == doctest::Approx(0.2273329419794747556).epsilon(1e-12));
  CHECK(hoft::bessel_j(2.75, 40.0) == doctest::Approx(-0.1148661528899231034).epsilon(1e-11));
  for (double nu : {0.0, 0.25, 0.5, 1.0, 1.4, 3.0})
    for (double x : {0.0, 1e-3, 0.5, 2.0, 7.5, 15.0, 24.0}) {
      CHECK(std::abs(hoft::bessel_j_normalized(nu, x) - oracle::bessel_series_normalized(nu, x)) < 1e-11);
      if (x > 0) CHECK(std::abs(hoft::bessel_j(nu, x) - oracle::bessel_series(nu, x)) < 1e-11);
    }
}

TEST_CASE("J_{1/2} closed form") {
  for (double x : {0.01, 0.3, 1.0, 4.0, 19.0}) {
    CHECK(std::abs(hoft::bessel_j(0.5, x) - std::sqrt(2.0 / (M_PI * x)) * std::sin(x)) < 1e-10);
    CHECK(std::abs(hoft::bessel_j_normalized(0.5, x) - std::sin(x) / x) < 1e-12);
  }
}

TEST_CASE("property: normalized Bessel is bounded by one") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> nu(-0.5, 4.0), x(0.0, 60.0);
  for (int i = 0; i < 500; ++i) CHECK(std::abs(hoft::bessel_j_normalized(nu(rng), x(rng))) <= 1.0 + 1e-12);
}
