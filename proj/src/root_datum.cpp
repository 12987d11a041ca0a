#include "hoft/root_datum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hoft/errors.hpp"

namespace hoft {
namespace {

void require_rank_one(const RootDatum& d, const char* what) {
  if (!d.is_rank_one()) throw DomainError(std::string(what) + ": rank-one datum required");
}

// log of 2^{-lambda} Gamma(lambda) / (Gamma(lambda/2 + m_a/4 + 1/2) Gamma(lambda/2 + m_a/4 + m_2a/2))
Complex log_c_alpha(double m_a, double m_2a, Complex lambda) {
  const Complex h = 0.5 * lambda + 0.25 * m_a;
  return -lambda * std::numbers::ln2 + log_gamma(lambda) - log_gamma(h + 0.5) - log_gamma(h + 0.5 * m_2a);
}

}  // namespace

RootDatum RootDatum::rank_one(double m_alpha, double m_2alpha) {
  if (!(m_alpha >= 0.0) || !(m_2alpha >= 0.0) || !(m_alpha + m_2alpha > 0.0) || !std::isfinite(m_alpha + m_2alpha)) {
    std::ostringstream msg;
    msg << "rank_one: multiplicities must be >= 0 with positive sum (got " << m_alpha << ", " << m_2alpha << ")";
    throw DomainError(msg.str());
  }
  RootDatum d;
  d.kind_ = DatumKind::RankOne;
  d.m_ = {m_alpha, m_2alpha};
  d.beta_ = m_alpha + m_2alpha;
  d.log_c_norm_ = -log_c_alpha(m_alpha, m_2alpha, d.rho()).real();
  return d;
}

RootDatum RootDatum::flat_product(std::vector<double> multiplicities) {
  if (multiplicities.empty()) throw DomainError("flat_product: at least one axis required");
  double sum = 0.0;
  for (double m : multiplicities) {
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("flat_product: multiplicities must be positive");
    sum += m;
  }
  RootDatum d;
  d.kind_ = DatumKind::FlatProduct;
  d.m_ = std::move(multiplicities);
  d.beta_ = sum;
  return d;
}

double RootDatum::m_alpha() const {
  require_rank_one(*this, "m_alpha");
  return m_[0];
}

double RootDatum::m_2alpha() const {
  require_rank_one(*this, "m_2alpha");
  return m_[1];
}

double RootDatum::rho() const {
  require_rank_one(*this, "rho");
  return 0.5 * m_[0] + m_[1];
}

double RootDatum::bessel_index() const {
  require_rank_one(*this, "bessel_index");
  return 0.5 * (beta_ - 1.0);
}

double RootDatum::axis_bessel_index(std::size_t axis) const {
  if (is_rank_one()) {
    if (axis != 0) throw DomainError("axis_bessel_index: rank-one datum has a single axis");
    return bessel_index();
  }
  if (axis >= m_.size()) throw DomainError("axis_bessel_index: axis out of range");
  return 0.5 * (m_[axis] - 1.0);
}

bool RootDatum::has_kappa() const noexcept { return kappa_ > 0.0; }
bool RootDatum::has_flat_kappa() const noexcept { return kappa0_ > 0.0; }

double RootDatum::kappa() const {
  if (!has_kappa()) throw ConfigError("datum " + describe() + " has no calibrated Plancherel constant");
  return kappa_;
}

double RootDatum::flat_kappa() const {
  if (!has_flat_kappa()) throw ConfigError("datum " + describe() + " has no calibrated flat Plancherel constant");
  return kappa0_;
}

RootDatum RootDatum::with_kappa(double kappa) const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("with_kappa: constant must be positive and finite");
  RootDatum d = *this;
  d.kappa_ = kappa;
  return d;
}

RootDatum RootDatum::with_flat_kappa(double kappa0) const {
  if (!(kappa0 > 0.0) || !std::isfinite(kappa0)) throw DomainError("with_flat_kappa: constant must be positive and finite");
  RootDatum d = *this;
  d.kappa0_ = kappa0;
  return d;
}

std::string RootDatum::describe() const {
  std::ostringstream out;
  if (is_rank_one()) {
    out << "rank_one(m_alpha=" << m_[0] << ", m_2alpha=" << m_[1] << ")";
  } else {
    out << "flat_product(m=";
    for (std::size_t i = 0; i < m_.size(); ++i) out << (i ? "," : "") << m_[i];
    out << ")";
  }
  return out.str();
}

double density_J(const RootDatum& datum, double x) {
  require_rank_one(datum, "density_J");
  if (!(x >= 0.0)) throw DomainError("density_J: negative radius");
  const double ma = datum.m_alpha();
  const double m2a = datum.m_2alpha();
  double log_j = 0.0;
  if (x == 0.0) return (ma + m2a > 0.0) ? 0.0 : 1.0;
  // 2 sinh x = e^x (1 - e^{-2x}) keeps large x finite in log space
  if (ma > 0.0) log_j += ma * (x + std::log(-std::expm1(-2.0 * x)));
  if (m2a > 0.0) log_j += m2a * (2.0 * x + std::log(-std::expm1(-4.0 * x)));
  return std::exp(log_j);
}

Complex c_function(const RootDatum& datum, Complex lambda) {
  require_rank_one(datum, "c_function");
  return std::exp(datum.log_c_norm_ + log_c_alpha(datum.m_[0], datum.m_[1], lambda));
}

double inverse_c_squared(const RootDatum& datum, double xi) {
  require_rank_one(datum, "inverse_c_squared");
  xi = std::abs(xi);
  if (xi == 0.0) return 0.0;
  const double log_abs_c = datum.log_c_norm_ + log_c_alpha(datum.m_[0], datum.m_[1], Complex(0.0, xi)).real();
  return std::exp(-2.0 * log_abs_c);
}

double plancherel_density(const RootDatum& datum, double xi) {
  return datum.kappa() * inverse_c_squared(datum, xi);
}

double dunkl_weight(const RootDatum& datum, std::span<const double> x) {
  if (datum.is_rank_one()) {
    if (x.size() != 1) throw DomainError("dunkl_weight: rank-one datum expects one coordinate");
    return std::pow(std::abs(x[0]), datum.beta());
  }
  const auto& m = datum.multiplicities();
  if (x.size() != m.size()) throw DomainError("dunkl_weight: dimension mismatch");
  double w = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) w *= std::pow(std::abs(x[i]), m[i]);
  return w;
}

double flat_kappa_closed_form(const RootDatum& datum) {
  const std::size_t axes = datum.is_rank_one() ? 1 : datum.multiplicities().size();
  double log_k = 0.0;
  for (std::size_t i = 0; i < axes; ++i) {
    const double nu = datum.axis_bessel_index(i);
    log_k -= 2.0 * nu * std::numbers::ln2 + 2.0 * std::lgamma(nu + 1.0);
  }
  return std::exp(log_k);
}

double kappa_closed_form(const RootDatum& datum) {
  require_rank_one(datum, "kappa_closed_form");
  return 0.5 / std::numbers::pi;
}

}  // namespace hoft
