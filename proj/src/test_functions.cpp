#include <cmath>
#include <random>
#include <sstream>

#include "hoft/errors.hpp"
#include "hoft/sampling.hpp"

namespace hoft {
namespace {

double gaussian(double x, double center, double width) {
  const double u = (x - center) / width;
  return std::exp(-0.5 * u * u);
}

// C-infinity step: 0 for u <= 0, 1 for u >= 1
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

struct BandTerm {
  double amplitude, center, width;
};

std::vector<BandTerm> band_terms(const TestFunctionSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0), ctr(0.0, 3.0), wid(0.3, 1.0);
  std::vector<BandTerm> terms;
  for (int k = 0; k < spec.terms; ++k) {
    // draw in a fixed order so the sequence does not depend on evaluation order of arguments
    const double a = amp(rng);
    const double c = ctr(rng);
    const double w = wid(rng);
    terms.push_back({a, c, w});
  }
  terms.front().amplitude = 1.0;  // keep the function away from zero
  return terms;
}

void validate(const TestFunctionSpec& spec) {
  switch (spec.family) {
    case TestFamily::GaussianBump:
      if (!(spec.width > 0.0)) throw ConfigError("gaussian_bump: width must be > 0");
      if (!(spec.center >= 0.0)) throw ConfigError("gaussian_bump: center must be >= 0");
      break;
    case TestFamily::PlateauBump:
      if (!(spec.width > 0.0)) throw ConfigError("plateau_bump: half-width must be > 0");
      if (!(spec.edge > 0.0) || spec.edge > spec.width) throw ConfigError("plateau_bump: edge must lie in (0, width]");
      if (!(spec.center >= 0.0)) throw ConfigError("plateau_bump: center must be >= 0");
      break;
    case TestFamily::CoshPower:
      if (!(spec.sigma > 0.0)) throw ConfigError("cosh_power: sigma must be > 0");
      break;
    case TestFamily::RandomBand:
      if (spec.terms < 1 || spec.terms > 64) throw ConfigError("random_band: terms must be in [1, 64]");
      break;
  }
}

}  // namespace

std::string family_name(TestFamily family) {
  switch (family) {
    case TestFamily::GaussianBump: return "gaussian_bump";
    case TestFamily::CoshPower: return "cosh_power";
    case TestFamily::PlateauBump: return "plateau_bump";
    case TestFamily::RandomBand: return "random_band";
  }
  return "unknown";
}

TestFamily parse_family(const std::string& name) {
  if (name == "gaussian_bump") return TestFamily::GaussianBump;
  if (name == "cosh_power") return TestFamily::CoshPower;
  if (name == "plateau_bump") return TestFamily::PlateauBump;
  if (name == "random_band") return TestFamily::RandomBand;
  throw ConfigError("unknown test function family '" + name + "'");
}

std::string TestFunctionSpec::id() const {
  std::ostringstream out;
  switch (family) {
    case TestFamily::GaussianBump: out << "gaussian(c=" << center << ",w=" << width << ")"; break;
    case TestFamily::CoshPower: out << "cosh_power(s=" << sigma << ")"; break;
    case TestFamily::PlateauBump: out << "plateau(c=" << center << ",w=" << width << ",e=" << edge << ")"; break;
    case TestFamily::RandomBand: out << "random_band(seed=" << seed << ",k=" << terms << ")"; break;
  }
  return out.str();
}

double evaluate_test_function(const TestFunctionSpec& spec, double x) {
  validate(spec);
  x = std::abs(x);
  switch (spec.family) {
    case TestFamily::GaussianBump:
      // even extension: average of the bump and its mirror image
      return 0.5 * (gaussian(x, spec.center, spec.width) + gaussian(x, -spec.center, spec.width));
    case TestFamily::CoshPower:
      return std::exp(-spec.sigma * (x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0)));
    case TestFamily::PlateauBump: {
      const double d = std::abs(x - spec.center);
      return smooth_step((spec.width - d) / spec.edge);
    }
    case TestFamily::RandomBand: {
      double sum = 0.0;
      for (const auto& t : band_terms(spec))
        sum += t.amplitude * 0.5 * (gaussian(x, t.center, t.width) + gaussian(x, -t.center, t.width));
      return sum;
    }
  }
  return 0.0;
}

SampledFunction make_test_function(const TestFunctionSpec& spec, MeasurePtr measure) {
  validate(spec);
  if (!measure || measure->dimension() != 1) throw ConfigError("make_test_function: radial measure required");
  SampledFunction f;
  f.id = spec.id();
  f.measure = measure;
  f.values.reserve(measure->size());
  if (spec.family == TestFamily::RandomBand) {
    const auto terms = band_terms(spec);
    for (double x : measure->grid().nodes()) {
      double sum = 0.0;
      for (const auto& t : terms) sum += t.amplitude * 0.5 * (gaussian(x, t.center, t.width) + gaussian(x, -t.center, t.width));
      f.values.emplace_back(sum);
    }
  } else {
    for (double x : measure->grid().nodes()) f.values.emplace_back(evaluate_test_function(spec, x));
  }
  return f;
}

}  // namespace hoft
