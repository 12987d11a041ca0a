#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hoft/errors.hpp"
#include "hoft/harness.hpp"

using hoft::RootDatum;

namespace {

// Small grids keep the suites fast; accuracy claims at these grids are loose.
hoft::HarnessSettings small_settings(int refine = 1) {
  hoft::HarnessSettings s;
  s.x_grid.x_max = 14.0;
  s.x_grid.order = 32;
  s.spectral_grid.x_max = 40.0;
  s.spectral_grid.order = 16;
  s.refine = refine;
  return s;
}

hoft::Family small_family() {
  hoft::Family f(2);
  f[0].width = 0.5;
  f[1].center = 1.5;
  f[1].width = 0.8;
  return f;
}

}  // namespace

TEST_CASE("natural weight spec") {
  const auto d = RootDatum::rank_one(1.0, 0.0);
  const auto w = hoft::WeightSpec::natural(d);
  CHECK(w.k == 1.0);
  CHECK(w.a == 0.0);
  CHECK(w.b == -4.0);
  CHECK(w.failures(d).empty());
  CHECK_NOTHROW(w.validate(d));
  const hoft::WeightSpec bad{1.0, 0.0, -3.0};
  REQUIRE(bad.failures(d).size() == 2);
  CHECK_THROWS_AS(bad.validate(d), hoft::ConfigError);
  // natural choice for larger beta
  const auto d2 = RootDatum::rank_one(2.0, 1.0);
  CHECK(hoft::WeightSpec::natural(d2).failures(d2).empty());
}

TEST_CASE("sublevel measures of the Young functions") {
  // rank one: mu0([0, t^{1/k}]) with weight x^beta is t^{(beta+1)/k}/(beta+1)
  const auto d = RootDatum::rank_one(1.0, 0.0);
  CHECK(hoft::flat_sublevel_measure(d, 2.0, 9.0) == doctest::Approx(4.5));
  // product (1, 2): Gamma(1) Gamma(3/2) / (4 Gamma(7/2)) R^5
  const auto z = RootDatum::flat_product({1.0, 2.0});
  const double c = std::tgamma(1.0) * std::tgamma(1.5) / (4.0 * std::tgamma(3.5));
  CHECK(hoft::flat_sublevel_measure(z, 5.0, 32.0) == doctest::Approx(c * 32.0));
  for (bool hyperbolic : {false, true}) {
    const auto [sup, inf] = hoft::young_sublevel_ratio(d, hyperbolic, 1e-3, 1e3);
    CHECK(std::isfinite(sup));
    CHECK(inf > 0.0);
    CHECK(sup >= inf);
  }
}

TEST_CASE("workspace calibrates kappa and caches transforms") {
  hoft::Harness h(small_settings());
  auto& ws = h.workspace(RootDatum::rank_one(1.0, 0.0));
  CHECK(&ws == &h.workspace(RootDatum::rank_one(1.0, 0.0)));
  CHECK(ws.datum().kappa() == doctest::Approx(0.5 / std::numbers::pi).epsilon(1e-4));
  auto& L = ws.level(1);
  const auto a = ws.transforms(L, small_family(), 0.0);
  const auto b = ws.transforms(L, small_family(), 0.0);
  CHECK(a[0] == b[0]);
  hoft::TestFunctionSpec auto_sigma;
  auto_sigma.family = hoft::TestFamily::CoshPower;
  auto_sigma.sigma = 0.0;
  CHECK(ws.resolve(auto_sigma).sigma == doctest::Approx(3.0));
}

TEST_CASE("Plancherel and Hausdorff-Young suites on small grids") {
  hoft::Harness h(small_settings());
  auto& ws = h.workspace(RootDatum::rank_one(1.0, 0.0));
  const auto pl = hoft::check_plancherel(ws, small_family());
  CHECK(pl.report.pass);
  for (const auto& r : pl.report.rows) CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-3));

  const auto hy = hoft::check_hausdorff_young(ws, {1.5, 2.0}, small_family());
  CHECK(hy.report.pass);
  for (const auto& r : hy.report.rows) CHECK(r.ratio <= 1.0 + 1e-3);

  // an unshifted "shifted" suite reproduces the L^q rows of the plain suite
  const auto sh = hoft::check_hausdorff_young_shifted(ws, 1.5, 0.0, small_family());
  for (const auto& r : hy.report.rows) {
    if (r.function_id.rfind("p=1.5|", 0) != 0) continue;
    const std::string id = "Lq|" + r.function_id.substr(6);
    bool found = false;
    for (const auto& s : sh.report.rows)
      if (s.function_id == id) {
        found = true;
        CHECK(s.ratio == doctest::Approx(r.ratio).epsilon(1e-12));
      }
    CHECK(found);
  }
  CHECK_THROWS_AS(hoft::check_hausdorff_young_shifted(ws, 1.5, 1.0, small_family()), hoft::ConfigError);
}

TEST_CASE("property: the Hausdorff-Young ratio is invariant under scaling the input") {
  hoft::Harness h(small_settings());
  auto& ws = h.workspace(RootDatum::rank_one(0.5, 0.3));
  auto& L = ws.level(1);
  hoft::TestFunctionSpec g;
  g.width = 0.7;
  const auto& f = ws.function(L, g);
  const auto* hat = ws.transforms(L, {g}, 0.0)[0];
  const double p = 1.25, q = 5.0;
  const double base = hoft::lp_norm(hat->on(L.nu), q) / hoft::lp_norm(f, p);
  for (double c : {1e-3, 0.5, 7.0, 1e4}) {
    const auto scaled_f = f.scaled(c);
    hoft::SpectralFunction scaled_hat = *hat;
    for (auto& v : scaled_hat.values) v *= c;
    CHECK(hoft::lp_norm(scaled_hat.on(L.nu), q) / hoft::lp_norm(scaled_f, p) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("O'Neil suite records violations and the reference constant") {
  const auto out = hoft::check_oneil(20240611, 100, {3.0, 4.0, 6.0});
  double violations = 0.0;
  for (double q : {3.0, 4.0, 6.0}) {
    violations += out.report.parameter("violations_q=" + hoft::format_number(q));
    CHECK(out.report.parameter("violations_at_reference_constant_q=" + hoft::format_number(q)) == 0.0);
  }
  CHECK(violations >= 1.0);
  CHECK_FALSE(out.report.pass);
}

TEST_CASE("kernel bound, c-function and closed forms") {
  hoft::Harness h(small_settings());
  auto& ws = h.workspace(RootDatum::rank_one(2.0, 1.0));
  CHECK(hoft::check_kernel_bound(ws, {0.0, 1.0, 5.0}, 20).report.pass);
  CHECK(hoft::check_c_function(ws).report.pass);
  CHECK(hoft::check_closed_forms().report.pass);
  const auto fl = hoft::check_flat_limit(h.workspace(RootDatum::rank_one(1.0, 0.0)), 1.0, {0.2, 0.1, 0.05, 0.02}, 5.0, 0.05, 0.05);
  CHECK(fl.report.pass);
}

TEST_CASE("Lorentz suite") {
  const auto out = hoft::check_lorentz(20240611, 100, nullptr, {});
  CHECK(out.report.pass);
}

TEST_CASE("rank-one suites reject flat data") {
  hoft::Harness h(small_settings());
  auto& ws = h.workspace(RootDatum::flat_product({1.0, 2.0}));
  CHECK_THROWS(hoft::check_plancherel(ws, small_family()));
}
