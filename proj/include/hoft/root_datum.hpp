#pragma once

#include <span>
#include <string>
#include <vector>

#include "hoft/special_functions.hpp"

namespace hoft {

enum class DatumKind { RankOne, FlatProduct };

/// Root datum (a, Sigma, m) for the two supported geometries: rank one with
/// roots {alpha, 2 alpha}, and the flat product Z_2^n with one multiplicity per axis.
///
/// Immutable. The Plancherel constants kappa (curved) and kappa0 (flat) start out
/// unset and are attached by with_kappa / with_flat_kappa after calibration.
class RootDatum {
 public:
  /// Throws DomainError unless m_alpha, m_2alpha >= 0 and m_alpha + m_2alpha > 0.
  static RootDatum rank_one(double m_alpha, double m_2alpha);
  /// Throws DomainError unless every multiplicity is > 0.
  static RootDatum flat_product(std::vector<double> multiplicities);

  DatumKind kind() const noexcept { return kind_; }
  bool is_rank_one() const noexcept { return kind_ == DatumKind::RankOne; }
  int rank() const noexcept { return kind_ == DatumKind::RankOne ? 1 : static_cast<int>(m_.size()); }
  std::size_t positive_indivisible_roots() const noexcept { return kind_ == DatumKind::RankOne ? 1 : m_.size(); }

  double m_alpha() const;
  double m_2alpha() const;
  /// Per-axis multiplicities (flat product) or {m_alpha, m_2alpha} (rank one).
  const std::vector<double>& multiplicities() const noexcept { return m_; }

  /// m_alpha/2 + m_2alpha (rank one only).
  double rho() const;
  /// m_alpha + m_2alpha (rank one), sum of multiplicities (flat product).
  double beta() const noexcept { return beta_; }
  /// Half the homogeneity degree of the flat weight omega_m.
  double flat_rho() const noexcept { return 0.5 * beta_; }
  /// Bessel index (m_alpha + m_2alpha - 1)/2 of the rank-one flat kernel.
  double bessel_index() const;
  /// Bessel index (m_i - 1)/2 of axis i.
  double axis_bessel_index(std::size_t axis) const;

  bool has_kappa() const noexcept;
  bool has_flat_kappa() const noexcept;
  /// Throws ConfigError when the datum has not been calibrated.
  double kappa() const;
  double flat_kappa() const;
  RootDatum with_kappa(double kappa) const;
  RootDatum with_flat_kappa(double kappa0) const;

  /// Short human-readable description, e.g. "rank_one(m_alpha=1, m_2alpha=0)".
  std::string describe() const;

 private:
  RootDatum() = default;
  DatumKind kind_ = DatumKind::RankOne;
  std::vector<double> m_;
  double beta_ = 0.0;
  double log_c_norm_ = 0.0;  // log of the constant c fixing c(rho) = 1
  double kappa_ = 0.0;
  double kappa0_ = 0.0;

  friend Complex c_function(const RootDatum&, Complex);
  friend double inverse_c_squared(const RootDatum&, double);
};

/// J(x) = (2 sinh x)^{m_alpha} (2 sinh 2x)^{m_2alpha}. Rank one only; x >= 0.
double density_J(const RootDatum& datum, double x);

/// Harish-Chandra c-function, normalized by c(rho) = 1. Rank one only.
/// The spectral parameter enters as lambda_alpha = lambda.
Complex c_function(const RootDatum& datum, Complex lambda);

/// |c(i xi)|^{-2} for real xi; even in xi and 0 at xi = 0.
double inverse_c_squared(const RootDatum& datum, double xi);

/// kappa |c(i xi)|^{-2}, the density of the Plancherel measure nu on [0, inf).
double plancherel_density(const RootDatum& datum, double xi);

/// Flat Plancherel weight omega_m(x) = prod_i |x_i|^{m_i}; in rank one |x|^{m_alpha + m_2alpha}.
double dunkl_weight(const RootDatum& datum, std::span<const double> x);

/// Closed-form flat Plancherel constant prod_i 1/(2^{2 nu_i} Gamma(nu_i + 1)^2) for the
/// normalized Bessel kernel. Used as a cross-check of the calibrated value.
double flat_kappa_closed_form(const RootDatum& datum);

/// Closed-form curved Plancherel constant 1/(2 pi) for the kernel normalization used here.
double kappa_closed_form(const RootDatum& datum);

}  // namespace hoft
