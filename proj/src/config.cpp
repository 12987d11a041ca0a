#include "hoft/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hoft/errors.hpp"

namespace hoft {
namespace {

enum class DatumUse { None, RankOne, Any, Optional };

struct ParamDefault {
  std::string key;
  std::vector<double> value;  // empty: required
};

struct TypeInfo {
  std::string type;
  std::string description;
  DatumUse datum;
  bool family;
  std::vector<ParamDefault> params;
};

const std::vector<TypeInfo>& type_table() {
  static const std::vector<TypeInfo> table = {
      {"plancherel", "calibrated Plancherel isometry ||F f||_{L2(nu)} / ||f||_{L2(mu)}", DatumUse::RankOne, true, {}},
      {"inversion", "relative L2(mu) error of the inverse transform roundtrip", DatumUse::RankOne, true, {}},
      {"kernel_bound", "max |phi_{i xi + eta}(x)| over the closed tube |eta| <= rho", DatumUse::RankOne, false,
       {{"xi", {0.0, 1.0, 5.0}}, {"samples", {50}}}},
      {"c_function", "c(rho) = 1 and the two-sided estimate of |c(i xi)|^{-2}", DatumUse::RankOne, false, {}},
      {"closed_forms", "closed-form kernels for m = (2, 0) and J_{1/2}", DatumUse::None, false, {}},
      {"flat_limit", "eps-contraction phi_{i xi/eps}(eps t) against the Bessel kernel", DatumUse::RankOne, false,
       {{"xi", {1.0}}, {"eps", {0.2, 0.1, 0.05, 0.02}}, {"t_max", {5.0}}, {"tolerance_eps", {0.05}},
        {"tolerance", {0.05}}}},
      {"lorentz", "Lorentz norms, rearrangement and equimeasurability on random step functions", DatumUse::Optional,
       true, {{"count", {100}}}},
      {"oneil", "||gh||*_{q',q} <= ||g||_q ||h||*_{r,inf} on random step pairs", DatumUse::None, false,
       {{"count", {100}}, {"q", {3.0, 4.0, 6.0}}}},
      {"hausdorff_young", "||F f||_{L^q(nu)} / ||f||_p, q = p'", DatumUse::RankOne, true, {{"p", {}}}},
      {"hausdorff_young_shifted", "L^q and sup norms of F f(i xi + eta) against ||f||_p", DatumUse::RankOne, true,
       {{"p", {}}, {"eta", {0.0}}}},
      {"hl_weighted", "weighted Hardy-Littlewood via strong (2,2) and weak (1,1) interpolation", DatumUse::RankOne,
       true, {{"p", {1.25, 1.5, 1.75}}}},
      {"hl_young", "((1/|W|) int |F f|^q d nu)^{1/q} against the psi_h weighted norm", DatumUse::RankOne, true,
       {{"q", {4.0}}}},
      {"hl_ver3_i", "Hardy-Littlewood with weight (xi |c|^{-2})^{r/p'-1} and shift eta", DatumUse::RankOne, true,
       {{"q", {2.0}}, {"p", {1.5, 2.0}}, {"eta", {0.0}}}},
      {"hl_ver3_ii", "||F f||_{L^p(nu)} against the J weighted norm, p >= q >= 2", DatumUse::RankOne, true,
       {{"q", {2.0}}, {"p", {2.0, 3.0, 4.0}}, {"eta", {0.0}}}},
      {"flat_plancherel", "calibrated flat Plancherel isometry", DatumUse::Any, true, {}},
      {"flat_hl", "flat Hardy-Littlewood with weight |xi|^{(2 rho0 + n)(p-2)}", DatumUse::Any, true,
       {{"p", {1.25, 1.5, 2.0}}}},
      {"flat_rs", "flat analogue of both Hardy-Littlewood parts and the norm-power Young function", DatumUse::Any,
       true, {{"q_i", {2.0}}, {"p_i", {1.25, 1.5, 2.0}}, {"q_ii", {2.0}}, {"p_ii", {2.0, 3.0, 4.0}}}},
  };
  return table;
}

const TypeInfo* find_type(const std::string& type) {
  for (const auto& t : type_table())
    if (t.type == type) return &t;
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& msg) const {
    const auto mark = node.Mark();
    std::ostringstream out;
    out << source_ << ':' << (mark.line >= 0 ? mark.line + 1 : 0) << ": " << msg;
    throw ConfigError(out.str());
  }

  int line(const YAML::Node& node) const { return node.Mark().line + 1; }

  void require_map(const YAML::Node& node, const std::string& what) const {
    if (!node.IsMap()) fail(node, what + " must be a mapping");
  }

  void allow_keys(const YAML::Node& node, const std::set<std::string>& keys, const std::string& what) const {
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!keys.count(key)) fail(kv.first, "unknown key '" + key + "' in " + what);
    }
  }

  double number(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a number");
    try {
      return parse_number(node.Scalar());
    } catch (const ConfigError&) {
      fail(node, what + " must be a number, got '" + node.Scalar() + "'");
    }
  }

  int integer(const YAML::Node& node, const std::string& what) const {
    const double v = number(node, what);
    if (v != std::floor(v) || std::abs(v) > 1e9) fail(node, what + " must be an integer");
    return static_cast<int>(v);
  }

  std::string text(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a string");
    return node.Scalar();
  }

  std::vector<double> numbers(const YAML::Node& node, const std::string& what) const {
    std::vector<double> out;
    if (node.IsSequence()) {
      for (const auto& v : node) out.push_back(number(v, what));
      if (out.empty()) fail(node, what + " must not be empty");
    } else {
      out.push_back(number(node, what));
    }
    return out;
  }

  GridOptions grid(const YAML::Node& node, GridOptions g, const std::string& extent, const std::string& what) const {
    require_map(node, what);
    allow_keys(node, {extent, "order", "panels_per_unit", "grading_levels", "grading_order"}, what);
    if (node[extent]) g.x_max = number(node[extent], what + "." + extent);
    if (node["order"]) g.order = integer(node["order"], what + ".order");
    if (node["panels_per_unit"]) g.panels_per_unit = integer(node["panels_per_unit"], what + ".panels_per_unit");
    if (node["grading_levels"]) g.grading_levels = integer(node["grading_levels"], what + ".grading_levels");
    if (node["grading_order"]) g.grading_order = integer(node["grading_order"], what + ".grading_order");
    try {
      RadialGrid probe(g);
    } catch (const ConfigError& e) {
      fail(node, e.what());
    }
    return g;
  }

  TestFunctionSpec function(const YAML::Node& node) const {
    require_map(node, "test function");
    allow_keys(node, {"type", "center", "width", "edge", "sigma", "terms", "seed"}, "test function");
    if (!node["type"]) fail(node, "test function needs a type");
    TestFunctionSpec s;
    try {
      s.family = parse_family(text(node["type"], "type"));
    } catch (const ConfigError& e) {
      fail(node["type"], e.what());
    }
    if (node["center"]) s.center = number(node["center"], "center");
    if (node["width"]) s.width = number(node["width"], "width");
    if (node["edge"]) s.edge = number(node["edge"], "edge");
    if (node["sigma"]) {
      if (node["sigma"].IsScalar() && node["sigma"].Scalar() == "auto")
        s.sigma = 0.0;
      else
        s.sigma = number(node["sigma"], "sigma");
    }
    if (node["terms"]) s.terms = integer(node["terms"], "terms");
    if (node["seed"]) s.seed = static_cast<std::uint64_t>(integer(node["seed"], "seed"));
    try {
      TestFunctionSpec probe = s;
      if (probe.family == TestFamily::CoshPower && probe.sigma <= 0.0) probe.sigma = 1.0;
      evaluate_test_function(probe, 0.0);
    } catch (const std::exception& e) {
      fail(node, e.what());
    }
    return s;
  }

  Family family(const YAML::Node& node) const {
    if (!node.IsSequence()) fail(node, "family must be a list of test functions");
    Family f;
    for (const auto& item : node) f.push_back(function(item));
    return f;
  }

  RootDatum datum(const YAML::Node& node) const {
    require_map(node, "datum");
    if (!node["kind"]) fail(node, "datum needs a kind (rank_one or flat_product)");
    const std::string kind = text(node["kind"], "kind");
    try {
      if (kind == "rank_one") {
        allow_keys(node, {"kind", "m_alpha", "m_2alpha"}, "rank_one datum");
        if (!node["m_alpha"]) fail(node, "rank_one datum needs m_alpha");
        const double ma = number(node["m_alpha"], "m_alpha");
        const double m2a = node["m_2alpha"] ? number(node["m_2alpha"], "m_2alpha") : 0.0;
        return RootDatum::rank_one(ma, m2a);
      }
      if (kind == "flat_product") {
        allow_keys(node, {"kind", "multiplicities"}, "flat_product datum");
        if (!node["multiplicities"]) fail(node, "flat_product datum needs multiplicities");
        return RootDatum::flat_product(numbers(node["multiplicities"], "multiplicities"));
      }
    } catch (const DomainError& e) {
      fail(node, e.what());
    }
    fail(node["kind"], "unknown datum kind '" + kind + "'");
  }

 private:
  std::string source_;
};

void check(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

std::string fmt(double v) { return format_number(v); }

// Cheap validations mirrored from the suites; run at parse time.
void validate_suite(SuiteConfig& s, const RootDatum* d) {
  const std::string& t = s.type;
  auto in_open_12 = [&](const std::string& key, bool closed_two) {
    for (double p : s.list(key))
      check(p > 1.0 && (closed_two ? p <= 2.0 : p < 2.0),
            t + ": " + key + " must lie in (1, 2" + (closed_two ? "]" : ")") + ", got " + fmt(p));
  };
  auto conj = [](double p) { return p / (p - 1.0); };
  if (t == "kernel_bound") {
    for (double xi : s.list("xi")) check(xi >= 0.0, "kernel_bound: xi must be >= 0");
    check(s.scalar("samples") >= 2, "kernel_bound: samples must be >= 2");
  } else if (t == "flat_limit") {
    for (double e : s.list("eps")) check(e > 0.0 && e <= 1.0, "flat_limit: eps must lie in (0, 1]");
    check(s.scalar("t_max") > 0.0, "flat_limit: t_max must be positive");
  } else if (t == "lorentz") {
    check(s.scalar("count") >= 1, "lorentz: count must be positive");
  } else if (t == "oneil") {
    check(s.scalar("count") >= 1, "oneil: count must be positive");
    for (double q : s.list("q")) check(q > 2.0 && std::isfinite(q), "oneil: q must lie in (2, inf), got " + fmt(q));
  } else if (t == "hausdorff_young") {
    in_open_12("p", true);
  } else if (t == "hausdorff_young_shifted") {
    check(s.list("p").size() == 1, "hausdorff_young_shifted: p must be a single value");
    in_open_12("p", true);
    const double p = s.scalar("p");
    if (s.has("eta_fraction")) {
      s.params["eta"] = {s.scalar("eta_fraction") * tube_bound(*d, p)};
      s.params.erase("eta_fraction");
    }
    validate_tube(*d, p, s.scalar("eta"));
  } else if (t == "hl_weighted") {
    in_open_12("p", false);
    (s.weight ? *s.weight : WeightSpec::natural(*d)).validate(*d);
  } else if (t == "hl_young") {
    for (double q : s.list("q")) check(q > 2.0 && std::isfinite(q), "hl_young: q must lie in (2, inf), got " + fmt(q));
  } else if (t == "hl_ver3_i") {
    const double q = s.scalar("q");
    check(q > 1.0 && q <= 2.0, "hl_ver3_i: q must lie in (1, 2], got " + fmt(q));
    for (double p : s.list("p")) {
      check(p > 1.0 && p <= q, "hl_ver3_i: p must lie in (1, q], got " + fmt(p));
      check(1.0 - (conj(q) - 1.0) / conj(p) > 0.0, "hl_ver3_i: r <= 0 for p = " + fmt(p));
      validate_tube(*d, p, s.scalar("eta"));
    }
  } else if (t == "hl_ver3_ii") {
    const double q = s.scalar("q");
    check(q >= 2.0 && std::isfinite(q), "hl_ver3_ii: q must lie in [2, inf), got " + fmt(q));
    for (double p : s.list("p")) check(p >= q && std::isfinite(p), "hl_ver3_ii: p must lie in [q, inf), got " + fmt(p));
    check(s.scalar("eta") == 0.0,
          "hl_ver3_ii: the tube C(eps_p rho) has empty interior for p >= 2; only eta = 0 is supported");
  } else if (t == "flat_hl") {
    in_open_12("p", true);
  } else if (t == "flat_rs") {
    const double qi = s.scalar("q_i"), qii = s.scalar("q_ii");
    check(qi > 1.0 && qi <= 2.0, "flat_rs: q_i must lie in (1, 2]");
    check(qii >= 2.0 && std::isfinite(qii), "flat_rs: q_ii must lie in [2, inf)");
    for (double p : s.list("p_i")) {
      check(p > 1.0 && p <= qi, "flat_rs: p_i must lie in (1, q_i], got " + fmt(p));
      check(1.0 - (conj(qi) - 1.0) / conj(p) > 0.0, "flat_rs: r <= 0 for p = " + fmt(p));
    }
    for (double p : s.list("p_ii")) check(p >= qii && std::isfinite(p), "flat_rs: p_ii must lie in [q_ii, inf)");
  }
}

}  // namespace

double SuiteConfig::scalar(const std::string& key) const {
  const auto& v = list(key);
  if (v.size() != 1) throw ConfigError("suite '" + id + "': parameter '" + key + "' must be a single value");
  return v.front();
}

const std::vector<double>& SuiteConfig::list(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw ConfigError("suite '" + id + "': missing parameter '" + key + "'");
  return it->second;
}

const RootDatum& RunConfig::datum(const std::string& name) const {
  for (const auto& [k, d] : data)
    if (k == name) return d;
  throw ConfigError("unknown datum '" + name + "'");
}

HarnessSettings RunConfig::settings() const {
  HarnessSettings s;
  s.x_grid = x_grid;
  s.spectral_grid = spectral_grid;
  s.refine = refine;
  s.seed = seed;
  s.calibration = calibration;
  return s;
}

HarnessSettings RunConfig::settings(const SuiteConfig& suite) const {
  HarnessSettings s = settings();
  if (suite.x_grid) s.x_grid = *suite.x_grid;
  if (suite.spectral_grid) s.spectral_grid = *suite.spectral_grid;
  return s;
}

const std::vector<std::pair<std::string, std::string>>& suite_types() {
  static const auto list = [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& t : type_table()) out.emplace_back(t.type, t.description);
    return out;
  }();
  return list;
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  const Parser P(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  RunConfig c;
  c.source = source;
  if (root.IsNull()) return c;
  P.require_map(root, "config");
  P.allow_keys(root, {"seed", "refine", "out", "grid", "spectral_grid", "calibration", "data", "family", "suites"},
               "config");
  if (root["seed"]) {
    const double v = P.number(root["seed"], "seed");
    if (v < 0 || v != std::floor(v) || v > 9.007199254740992e15) P.fail(root["seed"], "seed must be a non-negative integer");
    c.seed = static_cast<std::uint64_t>(v);
  }
  if (root["refine"]) {
    c.refine = P.integer(root["refine"], "refine");
    if (c.refine < 1) P.fail(root["refine"], "refine must be >= 1");
  }
  if (root["out"]) c.out_dir = P.text(root["out"], "out");
  if (root["grid"]) c.x_grid = P.grid(root["grid"], c.x_grid, "x_max", "grid");
  if (root["spectral_grid"]) c.spectral_grid = P.grid(root["spectral_grid"], c.spectral_grid, "lambda_max", "spectral_grid");
  if (root["calibration"]) c.calibration = P.function(root["calibration"]);
  if (root["data"]) {
    P.require_map(root["data"], "data");
    for (const auto& kv : root["data"]) {
      const std::string name = kv.first.as<std::string>();
      c.data.emplace_back(name, P.datum(kv.second));
    }
  }
  if (root["family"]) c.family = P.family(root["family"]);
  if (root["suites"]) {
    const YAML::Node suites = root["suites"];
    if (!suites.IsSequence()) P.fail(suites, "suites must be a list");
    std::set<std::string> ids;
    for (const auto& node : suites) {
      P.require_map(node, "suite");
      SuiteConfig s;
      s.line = P.line(node);
      if (!node["type"]) P.fail(node, "suite needs a type");
      s.type = P.text(node["type"], "type");
      const TypeInfo* info = find_type(s.type);
      if (!info) P.fail(node["type"], "unknown suite type '" + s.type + "'");
      s.id = node["id"] ? P.text(node["id"], "id") : s.type;
      if (!ids.insert(s.id).second) P.fail(node, "duplicate suite id '" + s.id + "'");
      std::set<std::string> allowed = {"id", "type", "datum", "grid", "spectral_grid"};
      if (info->family) allowed.insert("family");
      if (s.type == "hl_weighted") allowed.insert("weight");
      if (s.type == "hausdorff_young_shifted") allowed.insert("eta_fraction");
      for (const auto& p : info->params) allowed.insert(p.key);
      P.allow_keys(node, allowed, "suite '" + s.id + "'");

      const RootDatum* d = nullptr;
      if (node["datum"]) {
        if (info->datum == DatumUse::None) P.fail(node["datum"], "suite type '" + s.type + "' takes no datum");
        s.datum = P.text(node["datum"], "datum");
        try {
          d = &c.datum(s.datum);
        } catch (const ConfigError& e) {
          P.fail(node["datum"], e.what());
        }
        if (info->datum == DatumUse::RankOne && !d->is_rank_one())
          P.fail(node["datum"], "suite type '" + s.type + "' needs a rank_one datum");
      } else if (info->datum == DatumUse::RankOne || info->datum == DatumUse::Any) {
        P.fail(node, "suite '" + s.id + "' needs a datum");
      }
      for (const auto& p : info->params) {
        if (node[p.key]) {
          s.params[p.key] = P.numbers(node[p.key], p.key);
        } else if (!p.value.empty()) {
          s.params[p.key] = p.value;
        } else if (!(s.type == "hausdorff_young_shifted" && p.key == "eta")) {
          P.fail(node, "suite '" + s.id + "' needs parameter '" + p.key + "'");
        }
      }
      if (node["eta_fraction"]) {
        if (node["eta"]) P.fail(node["eta_fraction"], "give either eta or eta_fraction, not both");
        s.params["eta_fraction"] = {P.number(node["eta_fraction"], "eta_fraction")};
      }
      if (node["weight"]) {
        const YAML::Node w = node["weight"];
        if (!(w.IsScalar() && w.Scalar() == "natural")) {
          P.require_map(w, "weight");
          P.allow_keys(w, {"k", "a", "b"}, "weight");
          if (!w["k"] || !w["a"] || !w["b"]) P.fail(w, "weight needs k, a and b (or the value 'natural')");
          s.weight = WeightSpec{P.number(w["k"], "k"), P.number(w["a"], "a"), P.number(w["b"], "b")};
        }
      }
      if (node["family"]) s.family = P.family(node["family"]);
      if (node["grid"]) s.x_grid = P.grid(node["grid"], c.x_grid, "x_max", "grid");
      if (node["spectral_grid"]) s.spectral_grid = P.grid(node["spectral_grid"], c.spectral_grid, "lambda_max", "spectral_grid");
      try {
        validate_suite(s, d);
      } catch (const ConfigError& e) {
        P.fail(node, "suite '" + s.id + "': " + e.what());
      }
      c.suites.push_back(std::move(s));
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

namespace {

void emit_number(YAML::Emitter& out, double v) { out << format_number(v); }

void emit_numbers(YAML::Emitter& out, const std::vector<double>& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double x : v) emit_number(out, x);
  out << YAML::EndSeq;
}

void emit_grid(YAML::Emitter& out, const GridOptions& g, const std::string& extent) {
  out << YAML::BeginMap;
  out << YAML::Key << extent << YAML::Value;
  emit_number(out, g.x_max);
  out << YAML::Key << "order" << YAML::Value << g.order;
  out << YAML::Key << "panels_per_unit" << YAML::Value << g.panels_per_unit;
  out << YAML::Key << "grading_levels" << YAML::Value << g.grading_levels;
  out << YAML::Key << "grading_order" << YAML::Value << g.grading_order;
  out << YAML::EndMap;
}

void emit_function(YAML::Emitter& out, const TestFunctionSpec& s) {
  out << YAML::Flow << YAML::BeginMap;
  out << YAML::Key << "type" << YAML::Value << family_name(s.family);
  switch (s.family) {
    case TestFamily::GaussianBump:
      out << YAML::Key << "center" << YAML::Value << format_number(s.center);
      out << YAML::Key << "width" << YAML::Value << format_number(s.width);
      break;
    case TestFamily::CoshPower:
      out << YAML::Key << "sigma" << YAML::Value << (s.sigma <= 0.0 ? std::string("auto") : format_number(s.sigma));
      break;
    case TestFamily::PlateauBump:
      out << YAML::Key << "center" << YAML::Value << format_number(s.center);
      out << YAML::Key << "width" << YAML::Value << format_number(s.width);
      out << YAML::Key << "edge" << YAML::Value << format_number(s.edge);
      break;
    case TestFamily::RandomBand:
      out << YAML::Key << "terms" << YAML::Value << s.terms;
      out << YAML::Key << "seed" << YAML::Value << s.seed;
      break;
  }
  out << YAML::EndMap;
}

void emit_family(YAML::Emitter& out, const Family& f) {
  out << YAML::BeginSeq;
  for (const auto& s : f) emit_function(out, s);
  out << YAML::EndSeq;
}

}  // namespace

std::string dump_config(const RunConfig& c) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "seed" << YAML::Value << c.seed;
  out << YAML::Key << "refine" << YAML::Value << c.refine;
  out << YAML::Key << "out" << YAML::Value << c.out_dir;
  out << YAML::Key << "grid" << YAML::Value;
  emit_grid(out, c.x_grid, "x_max");
  out << YAML::Key << "spectral_grid" << YAML::Value;
  emit_grid(out, c.spectral_grid, "lambda_max");
  out << YAML::Key << "calibration" << YAML::Value;
  emit_function(out, c.calibration);
  out << YAML::Key << "data" << YAML::Value << YAML::BeginMap;
  for (const auto& [name, d] : c.data) {
    out << YAML::Key << name << YAML::Value << YAML::Flow << YAML::BeginMap;
    if (d.is_rank_one()) {
      out << YAML::Key << "kind" << YAML::Value << "rank_one";
      out << YAML::Key << "m_alpha" << YAML::Value << format_number(d.m_alpha());
      out << YAML::Key << "m_2alpha" << YAML::Value << format_number(d.m_2alpha());
    } else {
      out << YAML::Key << "kind" << YAML::Value << "flat_product";
      out << YAML::Key << "multiplicities" << YAML::Value;
      emit_numbers(out, d.multiplicities());
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  out << YAML::Key << "family" << YAML::Value;
  emit_family(out, c.family);
  out << YAML::Key << "suites" << YAML::Value << YAML::BeginSeq;
  for (const auto& s : c.suites) {
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << s.id;
    out << YAML::Key << "type" << YAML::Value << s.type;
    if (!s.datum.empty()) out << YAML::Key << "datum" << YAML::Value << s.datum;
    for (const auto& [k, v] : s.params) {
      out << YAML::Key << k << YAML::Value;
      emit_numbers(out, v);
    }
    if (s.weight) {
      out << YAML::Key << "weight" << YAML::Value << YAML::Flow << YAML::BeginMap;
      out << YAML::Key << "k" << YAML::Value << format_number(s.weight->k);
      out << YAML::Key << "a" << YAML::Value << format_number(s.weight->a);
      out << YAML::Key << "b" << YAML::Value << format_number(s.weight->b);
      out << YAML::EndMap;
    }
    if (s.family) {
      out << YAML::Key << "family" << YAML::Value;
      emit_family(out, *s.family);
    }
    if (s.x_grid) {
      out << YAML::Key << "grid" << YAML::Value;
      emit_grid(out, *s.x_grid, "x_max");
    }
    if (s.spectral_grid) {
      out << YAML::Key << "spectral_grid" << YAML::Value;
      emit_grid(out, *s.spectral_grid, "lambda_max");
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace hoft
