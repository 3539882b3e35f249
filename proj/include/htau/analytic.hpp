#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htau/rational.hpp"
#include "htau/series.hpp"
#include "htau/weights.hpp"

namespace htau {

using XSeries = LaurentSeries<Rational>;

/// rho_m at a fixed numeric beta for m in [lo, hi], computed eagerly so that
/// a vanishing G(-i beta) or a pole of G is reported before any series is
/// built. Quantum G uses the product truncated to factors 0..M.
class RhoTable {
public:
  RhoTable(const WeightGen& g, const Rational& beta, int lo, int hi, std::optional<int> quantum_terms = std::nullopt);

  const Rational& beta() const noexcept { return beta_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  const Rational& operator[](int m) const;

  /// Copy with rho_m replaced by rho_m + delta (for negative controls).
  RhoTable perturbed(int m, const Rational& delta) const;

private:
  Rational beta_;
  int lo_;
  int hi_;
  std::vector<Rational> values_;
};

/// phi_k(x) = beta x^{1-k} sum_{j=0}^{J} rho_{j-k} (x/beta)^j / j!.
/// The x^{1-k} prefactor is carried as the series valuation; the coefficient
/// of x^{1-k+j} is known exactly for j <= J.
struct PhiSeries {
  int k = 1;
  int order = 0;
  Rational beta;
  bool approximate = false; // built from a truncated quantum product
  XSeries series;

  int lead_exp() const noexcept { return 1 - k; }
  /// Coefficient of x^{1-k+j}.
  Rational coeff(int j) const { return series.coeff(lead_exp() + j); }
};

/// Throws SingularError for singular rho, UsageError for k < 1, J < 0, or
/// quantum G without quantum_terms.
PhiSeries phi_k(const WeightGen& g, const Rational& beta, int k, int order,
                std::optional<int> quantum_terms = std::nullopt);

/// Same construction from a precomputed (possibly perturbed) rho table.
PhiSeries phi_from_rho(const RhoTable& rho, int k, int order);

/// Euler operator x d/dx, termwise multiplication by the exponent.
PhiSeries euler_apply(const PhiSeries& p);
XSeries euler_apply(const XSeries& s);

/// Outcome of a termwise identity check.
struct IdentityReport {
  std::string identity;
  int k = 0;
  bool passed = false;
  bool approximate = false; // tolerance-based (truncated quantum product)
  int checked_through = -1; // largest x-order index j compared
  int nonzero = 0;          // residual coefficients that failed
  std::optional<int> first_failure;
  Rational max_abs_residual;
};

/// Compares every known coefficient of a residual series against zero
/// (exactly, or with the given tolerance). j counts from `lead_exp`.
IdentityReport check_residual(std::string name, int k, const XSeries& residual, int lead_exp,
                              const std::optional<Rational>& tolerance = std::nullopt);

/// beta (D + k - 1) phi_k - phi_{k-1}; requires k >= 2.
IdentityReport check_recursion(const PhiSeries& phi_k, const PhiSeries& phi_km1);
IdentityReport check_recursion(const WeightGen& g, const Rational& beta, int k, int order,
                               std::optional<int> quantum_terms = std::nullopt);

/// (x G(beta D) - D - (k - 1)) phi_k, with G(beta D) x^m = G(beta m) x^m.
IdentityReport check_spectral(const WeightGen& g, const PhiSeries& phi, std::optional<int> quantum_terms = std::nullopt);
IdentityReport check_spectral(const WeightGen& g, const Rational& beta, int k, int order,
                              std::optional<int> quantum_terms = std::nullopt);

/// kappa = (-1)^M prod_l beta c_l / prod_m beta d_m for rational G.
Rational kappa(const WeightGen& g, const Rational& beta);

/// Cleared-denominator form for rational G with all c_l != 0:
///   zeta prod_l (D + 1/(beta c_l)) phi + (D + k - 1) prod_m (D - 1 - 1/(beta d_m)) phi = 0,
/// zeta = -kappa x.
IdentityReport check_rational_ode(const WeightGen& g, const PhiSeries& phi);

/// For G = 1: coefficient j of phi_k equals beta^{1-k}/j!.
IdentityReport check_trivial_closed_form(const PhiSeries& phi);

/// prod_{i<j} (x_i - x_j); empty product is 1.
Rational vandermonde(std::span<const Rational> x);

/// tau([X]) through a determinantal formula, computed as an exact series in a
/// scale parameter t with x_i = t y_i: coefficient N of `series` is the
/// degree-N homogeneous part of tau evaluated at y.
struct TauRepresentation {
  XSeries series;
  Rational value;               // sum of the known coefficients (truncated tau at y)
  int exact_through = 0;        // highest t-degree guaranteed by the truncation
  int beta_exponent = 0;        // calibration power of beta applied
  int sign = 1;                 // orientation sign applied
  bool approximate = false;
};

/// Per-basis-element power of beta by which the literal determinantal
/// formula exceeds the series tau; calibrated at n = 1.
inline constexpr int kRowCalibrationExponent = -1;

/// (prod x_i^{n-1} / prod_{i=1}^n rho_{-i}) det(phi_i(x_j)) / Delta(x), multiplied
/// by beta^{n * kRowCalibrationExponent}. x_i must be distinct and nonzero.
TauRepresentation tau_det_rep(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                              std::optional<int> quantum_terms = std::nullopt);

/// gamma_n (prod x_i^{n-1}) det(D^{i-1} phi_n(x_j)) / Delta(x), gamma_n =
/// beta^{n(n-1)/2} / prod rho_{-i}, with the same beta calibration and the row
/// orientation sign (-1)^{n(n-1)/2}.
TauRepresentation tau_wronskian(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                                std::optional<int> quantum_terms = std::nullopt);

/// The uncalibrated right-hand sides, for determining the calibration.
XSeries det_rep_literal(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                        std::optional<int> quantum_terms = std::nullopt);
XSeries wronskian_literal(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                          std::optional<int> quantum_terms = std::nullopt);

/// Finds (sign, e) with sign * beta^e * literal_0 = 1, where literal_0 is the
/// constant t-coefficient of a literal representation (tau(0) = 1). Returns
/// nullopt if no such integer e in [-64, 64] exists.
struct Calibration {
  int sign;
  int beta_exponent;
};
std::optional<Calibration> calibrate(const XSeries& literal, const Rational& beta);

} // namespace htau
