#include "hoft/runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hoft/errors.hpp"
#include "json.hpp"

namespace hoft {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

bool selected(const SuiteConfig& s, const RunOptions& o) {
  if (!o.suite_ids.empty() && std::find(o.suite_ids.begin(), o.suite_ids.end(), s.id) == o.suite_ids.end()) return false;
  if (!o.suite_types.empty() && !o.suite_types.count(s.type)) return false;
  return true;
}

}  // namespace

RunConfig apply_options(RunConfig config, const RunOptions& options) {
  if (options.out_dir) config.out_dir = *options.out_dir;
  if (options.refine) {
    if (*options.refine < 1) throw ConfigError("--refine must be >= 1");
    config.refine = *options.refine;
  }
  if (options.seed) config.seed = *options.seed;
  for (const auto& id : options.suite_ids) {
    const bool known = std::any_of(config.suites.begin(), config.suites.end(), [&](const auto& s) { return s.id == id; });
    if (!known) throw ConfigError("--suite: no suite with id '" + id + "' in " + config.source);
  }
  return config;
}

SuiteOutput run_suite(const RunConfig& c, const SuiteConfig& s, Harness& harness) {
  const Family& family = s.family ? *s.family : c.family;
  const HarnessSettings settings = c.settings(s);
  auto ws = [&]() -> Workspace& { return harness.workspace(c.datum(s.datum), settings); };
  const std::string& t = s.type;
  SuiteOutput out;
  if (t == "plancherel") {
    out = check_plancherel(ws(), family);
  } else if (t == "inversion") {
    out = check_inversion(ws(), family);
  } else if (t == "kernel_bound") {
    out = check_kernel_bound(ws(), s.list("xi"), static_cast<int>(s.scalar("samples")));
  } else if (t == "c_function") {
    out = check_c_function(ws());
  } else if (t == "closed_forms") {
    out = check_closed_forms();
  } else if (t == "flat_limit") {
    out = check_flat_limit(ws(), s.scalar("xi"), s.list("eps"), s.scalar("t_max"), s.scalar("tolerance_eps"),
                           s.scalar("tolerance"));
  } else if (t == "lorentz") {
    out = check_lorentz(c.seed, static_cast<int>(s.scalar("count")), s.datum.empty() ? nullptr : &ws(), family);
  } else if (t == "oneil") {
    out = check_oneil(c.seed, static_cast<int>(s.scalar("count")), s.list("q"));
  } else if (t == "hausdorff_young") {
    out = check_hausdorff_young(ws(), s.list("p"), family);
  } else if (t == "hausdorff_young_shifted") {
    out = check_hausdorff_young_shifted(ws(), s.scalar("p"), s.scalar("eta"), family);
  } else if (t == "hl_weighted") {
    const RootDatum& d = c.datum(s.datum);
    out = check_hl_weighted(ws(), s.list("p"), s.weight ? *s.weight : WeightSpec::natural(d), family);
  } else if (t == "hl_young") {
    out = check_hl_young(ws(), s.list("q"), family);
  } else if (t == "hl_ver3_i") {
    out = check_hl_ver3_i(ws(), s.scalar("q"), s.list("p"), s.scalar("eta"), family);
  } else if (t == "hl_ver3_ii") {
    out = check_hl_ver3_ii(ws(), s.scalar("q"), s.list("p"), s.scalar("eta"), family);
  } else if (t == "flat_plancherel") {
    out = check_flat_plancherel(ws(), family);
  } else if (t == "flat_hl") {
    out = check_flat_hl(ws(), s.list("p"), family);
  } else if (t == "flat_rs") {
    out = check_flat_rs(ws(), s.scalar("q_i"), s.list("p_i"), s.scalar("q_ii"), s.list("p_ii"), family);
  } else {
    throw ConfigError("unknown suite type '" + t + "'");
  }
  out.report.suite_id = s.id;
  return out;
}

RunSummary run(const RunConfig& config, const RunOptions& options, std::ostream* log) {
  const fs::path dir(config.out_dir);
  fs::create_directories(dir / "plots");
  Harness harness(config.settings());
  RunSummary summary;
  for (const auto& s : config.suites) {
    if (!selected(s, options)) continue;
    SuiteStatus st;
    st.id = s.id;
    st.type = s.type;
    st.datum = s.datum;
    const auto start = std::chrono::steady_clock::now();
    InequalityReport report;
    std::vector<PlotSeries> plots;
    try {
      auto out = run_suite(config, s, harness);
      report = std::move(out.report);
      plots = std::move(out.plots);
      st.pass = report.pass;
      st.max_ratio = report.max_ratio;
    } catch (const std::exception& e) {
      st.pass = false;
      st.error = e.what();
      report = InequalityReport{};
      report.suite_id = s.id;
      report.inequality = s.type;
      report.datum = s.datum;
      report.pass = false;
      report.add_note("error", e.what());
    }
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_file(dir / (s.id + ".json"), to_json(report));
    write_file(dir / (s.id + ".csv"), to_csv(report));
    for (const auto& p : plots) write_file(dir / "plots" / (s.id + "_" + p.name + ".csv"), plot_csv(p));
    if (log) {
      *log << (st.pass ? "PASS " : "FAIL ") << s.id << " (" << s.type << ")";
      if (!st.error.empty()) *log << " error: " << st.error;
      *log << '\n' << std::flush;
    }
    summary.pass = summary.pass && st.pass;
    summary.suites.push_back(std::move(st));
  }
  write_file(dir / "summary.json", summary_json(config, summary));
  write_file(dir / "timings.json", timings_json(summary));
  return summary;
}

std::string summary_json(const RunConfig& config, const RunSummary& summary) {
  Json j;
  j["config"] = config.source;
  j["seed"] = config.seed;
  j["refine"] = config.refine;
  j["pass"] = summary.pass;
  Json suites = Json::array();
  for (const auto& s : summary.suites) {
    Json o;
    o["id"] = s.id;
    o["type"] = s.type;
    o["datum"] = s.datum;
    o["pass"] = s.pass;
    o["max_ratio"] = number(s.max_ratio);
    o["error"] = s.error;
    suites.push_back(o);
  }
  j["suites"] = suites;
  return j.dump(2) + "\n";
}

std::string timings_json(const RunSummary& summary) {
  Json j = Json::object();
  double total = 0.0;
  for (const auto& s : summary.suites) {
    j[s.id] = s.seconds;
    total += s.seconds;
  }
  j["total"] = total;
  return j.dump(2) + "\n";
}

std::string plot_csv(const PlotSeries& series) {
  std::ostringstream out;
  for (std::size_t i = 0; i < series.columns.size(); ++i) out << (i ? "," : "") << series.columns[i];
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace hoft
