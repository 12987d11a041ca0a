#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hoft/config.hpp"
#include "hoft/errors.hpp"
#include "hoft/report.hpp"
#include "hoft/runner.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hoft_unit_" + name);
  fs::remove_all(p);
  return p;
}

const char* kSmall = R"(grid: {x_max: 14, order: 32}
spectral_grid: {lambda_max: 40, order: 16}
refine: 1
data:
  m10: {kind: rank_one, m_alpha: 1, m_2alpha: 0}
family:
  - {type: gaussian_bump, center: 0, width: 0.5}
suites:
  - {id: cf, type: closed_forms}
  - {id: kb, type: kernel_bound, datum: m10, samples: 10}
  - {id: broken, type: hausdorff_young, datum: m10, p: 1.5, family: [{type: cosh_power, sigma: 0.2}]}
  - {id: fl, type: flat_limit, datum: m10}
)";

}  // namespace

TEST_CASE("empty suite list passes with an empty summary") {
  auto c = hoft::parse_config("{}", "empty");
  c.out_dir = scratch("empty").string();
  const auto s = hoft::run(c, {});
  CHECK(s.pass);
  CHECK(s.suites.empty());
  const auto j = nlohmann::json::parse(slurp(fs::path(c.out_dir) / "summary.json"));
  CHECK(j["suites"].empty());
  CHECK(j["pass"] == true);
}

TEST_CASE("a failing suite is recorded and the run continues") {
  auto c = hoft::parse_config(kSmall, "small");
  c.out_dir = scratch("continue").string();
  const auto s = hoft::run(c, {});
  REQUIRE(s.suites.size() == 4);
  CHECK(s.suites[0].pass);
  CHECK(s.suites[1].pass);
  CHECK_FALSE(s.suites[2].pass);
  CHECK(s.suites[2].error.find("integrability") != std::string::npos);
  CHECK(s.suites[3].pass);
  CHECK_FALSE(s.pass);
  const fs::path out(c.out_dir);
  for (const char* f : {"cf.json", "cf.csv", "kb.json", "broken.json", "fl.json", "summary.json", "timings.json"})
    CHECK(fs::exists(out / f));
  CHECK(fs::exists(out / "plots" / "fl_flat_limit_error.csv"));
  const auto broken = hoft::report_from_json(slurp(out / "broken.json"));
  CHECK_FALSE(broken.pass);
  CHECK_FALSE(broken.notes.empty());
}

TEST_CASE("determinism of every artifact except timings") {
  auto c = hoft::parse_config(kSmall, "small");
  hoft::RunOptions o;
  o.suite_ids = {"cf", "kb", "fl"};
  const fs::path a = scratch("det1"), b = scratch("det2");
  c.out_dir = a.string();
  hoft::run(c, o);
  c.out_dir = b.string();
  hoft::run(c, o);
  std::size_t compared = 0;
  for (const auto& e : fs::recursive_directory_iterator(a)) {
    if (!e.is_regular_file() || e.path().filename() == "timings.json") continue;
    const fs::path other = b / fs::relative(e.path(), a);
    REQUIRE(fs::exists(other));
    CHECK(slurp(e.path()) == slurp(other));
    ++compared;
  }
  CHECK(compared >= 7);
  CHECK(slurp(a / "summary.json").find("seconds") == std::string::npos);
}

TEST_CASE("options override the config and filter suites") {
  auto c = hoft::parse_config(kSmall, "small");
  hoft::RunOptions o;
  o.seed = 5;
  o.refine = 2;
  o.out_dir = scratch("opts").string();
  o.suite_ids = {"cf"};
  const auto applied = hoft::apply_options(c, o);
  CHECK(applied.seed == 5);
  CHECK(applied.refine == 2);
  CHECK(applied.out_dir == *o.out_dir);
  const auto s = hoft::run(applied, o);
  REQUIRE(s.suites.size() == 1);
  CHECK(s.suites[0].id == "cf");
  o.suite_ids = {"missing"};
  CHECK_THROWS_AS(hoft::apply_options(c, o), hoft::ConfigError);
  o.suite_ids.clear();
  o.refine = 0;
  CHECK_THROWS_AS(hoft::apply_options(c, o), hoft::ConfigError);
}

TEST_CASE("plot CSV format") {
  hoft::PlotSeries p{"s", {"xi", "value"}, {{0.5, 1.0}, {1.0, 0.25}}};
  CHECK(hoft::plot_csv(p) == "xi,value\n0.5,1\n1,0.25\n");
}
