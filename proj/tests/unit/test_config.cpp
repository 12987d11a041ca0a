#include <string>

#include "doctest.h"
#include "hoft/config.hpp"
#include "hoft/errors.hpp"

namespace {

std::string error_of(const std::string& yaml) {
  try {
    hoft::parse_config(yaml, "test.yaml");
  } catch (const hoft::ConfigError& e) {
    return e.what();
  }
  return "";
}

const char* kFull = R"(seed: 7
refine: 3
out: somewhere
grid: {x_max: 14, order: 32}
spectral_grid: {lambda_max: 40, order: 16}
data:
  m10: {kind: rank_one, m_alpha: 1, m_2alpha: 0}
  z2: {kind: flat_product, multiplicities: [1, 2]}
family:
  - {type: gaussian_bump, center: 0, width: 0.5}
  - {type: cosh_power, sigma: auto}
  - {type: plateau_bump, width: 1, edge: 0.3}
suites:
  - {id: hy, type: hausdorff_young, datum: m10, p: [1.25, 1.5]}
  - {id: shifted, type: hausdorff_young_shifted, datum: m10, p: 1.5, eta_fraction: 0.5}
  - {id: hlw, type: hl_weighted, datum: m10, weight: {k: 1, a: 0, b: -4}}
  - {id: o, type: oneil, q: [3]}
  - id: frs
    type: flat_rs
    datum: z2
    grid: {x_max: 10}
    family:
      - {type: gaussian_bump, center: 0, width: 1}
)";

}  // namespace

TEST_CASE("parse a full config") {
  const auto c = hoft::parse_config(kFull, "test.yaml");
  CHECK(c.seed == 7);
  CHECK(c.refine == 3);
  CHECK(c.out_dir == "somewhere");
  CHECK(c.x_grid.x_max == 14.0);
  CHECK(c.x_grid.order == 32);
  CHECK(c.spectral_grid.order == 16);
  REQUIRE(c.data.size() == 2);
  CHECK(c.datum("z2").rank() == 2);
  CHECK_THROWS_AS(c.datum("nope"), hoft::ConfigError);
  REQUIRE(c.family.size() == 3);
  CHECK(c.family[1].sigma <= 0.0);  // auto
  REQUIRE(c.suites.size() == 5);
  CHECK(c.suites[0].list("p").size() == 2);
  // eta_fraction 0.5 of eps_p rho = (2/1.5 - 1)(1/2)
  CHECK(c.suites[1].scalar("eta") == doctest::Approx(0.5 * (1.0 / 3.0) * 0.5));
  CHECK_FALSE(c.suites[1].has("eta_fraction"));
  REQUIRE(c.suites[2].weight);
  CHECK(c.suites[2].weight->b == -4.0);
  CHECK(c.suites[2].list("p").size() == 3);  // default
  CHECK(c.suites[3].datum.empty());
  CHECK(c.suites[3].scalar("count") == 100);
  REQUIRE(c.suites[4].x_grid);
  CHECK(c.suites[4].x_grid->x_max == 10.0);
  CHECK(c.suites[4].x_grid->order == 32);  // inherited
  CHECK(c.settings(c.suites[4]).x_grid.x_max == 10.0);
  CHECK(c.settings().x_grid.x_max == 14.0);
  CHECK(c.suites[4].line == 18);
}

TEST_CASE("dump and parse roundtrip") {
  const auto c = hoft::parse_config(kFull, "test.yaml");
  const std::string once = hoft::dump_config(c);
  const auto back = hoft::parse_config(once, "dump");
  CHECK(hoft::dump_config(back) == once);
  CHECK(back.suites.size() == c.suites.size());
  CHECK(back.suites[1].scalar("eta") == c.suites[1].scalar("eta"));
}

TEST_CASE("empty config gives defaults and no suites") {
  const auto c = hoft::parse_config("{}", "empty");
  CHECK(c.suites.empty());
  CHECK(c.seed == 20240611);
  CHECK(c.family.size() == hoft::default_family().size());
}

TEST_CASE("errors carry file and line") {
  CHECK(error_of("seed: 1\nbogus: 2\n").rfind("test.yaml:2:", 0) == 0);
  CHECK(error_of("suites:\n  - {type: nonsense}\n").find("test.yaml:2:") == 0);
  CHECK(error_of("suites:\n  - {type: nonsense}\n").find("unknown suite type") != std::string::npos);
  const std::string needs_datum = error_of("suites:\n  - {type: plancherel}\n");
  CHECK(needs_datum.find("needs a datum") != std::string::npos);
  CHECK(error_of("data:\n  a: {kind: rank_one, m_alpha: -1}\n").find("test.yaml:2:") == 0);
  CHECK(error_of("refine: 0\n").find("refine") != std::string::npos);
  CHECK(error_of("suites: 3\n").find("list") != std::string::npos);
  CHECK(error_of("data:\n  z: {kind: flat_product, multiplicities: [1]}\nsuites:\n  - {type: plancherel, datum: z}\n")
            .find("rank_one") != std::string::npos);
  CHECK(error_of("suites:\n  - {type: oneil}\n  - {type: oneil}\n").find("duplicate") != std::string::npos);
  CHECK(error_of("suites:\n  - {type: oneil, q: [2]}\n").find("q must lie in (2, inf)") != std::string::npos);
  CHECK(error_of("suites:\n  - {type: hausdorff_young, datum: x, p: 1.5}\n").find("x") != std::string::npos);
}

TEST_CASE("eta outside the tube names the tube bound") {
  const std::string e = error_of(
      "data:\n  m: {kind: rank_one, m_alpha: 1, m_2alpha: 0}\n"
      "suites:\n  - {type: hausdorff_young_shifted, datum: m, p: 1.5, eta: 0.5}\n");
  CHECK(e.rfind("test.yaml:4:", 0) == 0);
  CHECK(e.find("eps_p*rho") != std::string::npos);
  CHECK(e.find("0.1666") != std::string::npos);
}

TEST_CASE("invalid weight specs list every failed condition") {
  const std::string e = error_of(
      "data:\n  m: {kind: rank_one, m_alpha: 1, m_2alpha: 0}\n"
      "suites:\n  - {type: hl_weighted, datum: m, weight: {k: -1, a: 0, b: 0}}\n");
  CHECK(e.find("k >= 0") != std::string::npos);
  CHECK(e.find("test.yaml:4:") == 0);
}

TEST_CASE("hl_ver3_ii needs eta = 0") {
  const std::string e = error_of(
      "data:\n  m: {kind: rank_one, m_alpha: 1, m_2alpha: 0}\n"
      "suites:\n  - {type: hl_ver3_ii, datum: m, eta: 0.1}\n");
  CHECK(!e.empty());
}

TEST_CASE("suite types are listed") {
  const auto& types = hoft::suite_types();
  CHECK(types.size() == 17);
  CHECK(types.front().first == "plancherel");
}
