#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "hoft/config.hpp"
#include "hoft/errors.hpp"
#include "hoft/runner.hpp"

namespace {

struct Common {
  std::string config;
  hoft::RunOptions options;
  std::optional<int> refine;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_flags(CLI::App* app, Common& c) {
  app->add_option("config,--config", c.config, "YAML run configuration");
  app->add_option("--out", c.out, "output directory (overrides the config's `out`)");
  app->add_option("--refine", c.refine, "grid multiplier for the stability checks")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "seed for the randomized suites");
  app->add_option("--suite", c.options.suite_ids, "run only the suite with this id (repeatable)");
}

// flat_limit suites with default parameters, one per rank-one datum.
void add_default_limits(hoft::RunConfig& config) {
  for (const auto& [name, datum] : config.data) {
    if (!datum.is_rank_one()) continue;
    const std::string yaml = "data:\n  d: {kind: rank_one, m_alpha: " + hoft::format_number(datum.m_alpha()) +
                             ", m_2alpha: " + hoft::format_number(datum.m_2alpha()) +
                             "}\nsuites:\n  - {type: flat_limit, datum: d}\n";
    hoft::SuiteConfig s = hoft::parse_config(yaml, "<limits>").suites.front();
    s.id = "flat_limit_" + name;
    s.datum = name;
    config.suites.push_back(s);
  }
}

int execute(Common& c, const std::set<std::string>& types, bool limits) {
  if (c.config.empty()) throw hoft::ConfigError("no config given (pass it positionally or with --config)");
  hoft::RunConfig config = hoft::load_config(c.config);
  c.options.out_dir = c.out;
  c.options.refine = c.refine;
  c.options.seed = c.seed;
  c.options.suite_types = types;
  if (limits) {
    bool any = false;
    for (const auto& s : config.suites) any = any || s.type == "flat_limit";
    if (!any) add_default_limits(config);
  }
  config = hoft::apply_options(std::move(config), c.options);
  const auto summary = hoft::run(config, c.options, &std::cout);
  std::cout << (summary.pass ? "PASS" : "FAIL") << ": " << summary.suites.size() << " suite(s), reports in "
            << config.out_dir << '\n';
  return summary.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heckman-Opdam transform inequality harness"};
  app.require_subcommand(1);

  Common run_args, planch_args, limit_args;
  auto* run = app.add_subcommand("run", "run every suite in a config");
  add_flags(run, run_args);
  auto* planch = app.add_subcommand("plancherel", "run only the calibration and isometry suites");
  add_flags(planch, planch_args);
  auto* limits = app.add_subcommand("limits", "run the eps-contraction study (defaults per rank-one datum)");
  add_flags(limits, limit_args);
  auto* list = app.add_subcommand("list-suites", "print the known suite types");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return execute(run_args, {}, false);
    if (*planch) return execute(planch_args, {"plancherel", "flat_plancherel"}, false);
    if (*limits) return execute(limit_args, {"flat_limit"}, true);
    if (*list) {
      for (const auto& [type, text] : hoft::suite_types()) std::cout << type << "  " << text << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
