#include "htau/analytic.hpp"

#include <set>

#include "htau/errors.hpp"
#include "htau/matrix.hpp"
#include "htau/tau_series.hpp"

namespace htau {

RhoTable::RhoTable(const WeightGen& g, const Rational& beta, int lo, int hi, std::optional<int> quantum_terms)
    : beta_(beta), lo_(lo), hi_(hi) {
  if (beta.is_zero()) throw UsageError("rho table: beta must be nonzero");
  if (hi < lo) throw UsageError("rho table: empty index range");
  if (g.is_quantum() && !quantum_terms) {
    throw UsageError("quantum weight needs a product truncation M for numeric evaluation");
  }
  values_.reserve(static_cast<std::size_t>(hi - lo + 1));
  // Build outward from rho_0 = 1 with rho_m = beta G(m beta) rho_{m-1}, which
  // is the defining product read incrementally.
  std::vector<Rational> neg; // rho_{-1}, rho_{-2}, ...
  if (lo < 0) {
    Rational v = Rational(1) / beta; // rho_{-1}
    neg.push_back(v);
    for (int m = 2; m <= -lo; ++m) {
      const int i = m - 1;
      const Rational gi = evaluate_weight(g, Rational(-i) * beta, quantum_terms);
      if (gi.is_zero()) {
        throw SingularError(ErrorCode::singular_parameter,
                            "rho_" + std::to_string(-m) + " is singular: G(-" + std::to_string(i) +
                                " beta) = 0 at beta = " + beta.str() + " (i = " + std::to_string(i) + ")");
      }
      v = v / (beta * gi);
      neg.push_back(v);
    }
  }
  std::vector<Rational> pos{Rational(1)}; // rho_0, rho_1, ...
  for (int m = 1; m <= hi; ++m) {
    try {
      pos.push_back(pos.back() * beta * evaluate_weight(g, Rational(m) * beta, quantum_terms));
    } catch (const SingularError& e) {
      throw SingularError(e.code(), "rho_" + std::to_string(m) + " needs G(" + std::to_string(m) +
                                        " beta) at beta = " + beta.str() + ": " + e.what());
    }
  }
  for (int m = lo; m <= hi; ++m) {
    values_.push_back(m < 0 ? neg[static_cast<std::size_t>(-m - 1)] : pos[static_cast<std::size_t>(m)]);
  }
}

const Rational& RhoTable::operator[](int m) const {
  if (m < lo_ || m > hi_) {
    throw UsageError("rho index " + std::to_string(m) + " outside the table range " + std::to_string(lo_) + ".." +
                     std::to_string(hi_));
  }
  return values_[static_cast<std::size_t>(m - lo_)];
}

RhoTable RhoTable::perturbed(int m, const Rational& delta) const {
  RhoTable copy = *this;
  copy.values_.at(static_cast<std::size_t>(m - lo_)) += delta;
  return copy;
}

PhiSeries phi_from_rho(const RhoTable& rho, int k, int order) {
  if (k < 1) throw UsageError("phi_k is constructed for k >= 1 only");
  if (order < 0) throw UsageError("phi_k: order must be non-negative");
  const Rational& beta = rho.beta();
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  Rational scale = beta; // beta^{1-j} / j!
  for (int j = 0; j <= order; ++j) {
    if (j > 0) scale /= beta * Rational(j);
    coeffs.push_back(scale * rho[j - k]);
  }
  PhiSeries p;
  p.k = k;
  p.order = order;
  p.beta = beta;
  p.series = XSeries(1 - k, std::move(coeffs), 1 - k + order);
  return p;
}

PhiSeries phi_k(const WeightGen& g, const Rational& beta, int k, int order, std::optional<int> quantum_terms) {
  if (k < 1) throw UsageError("phi_k is constructed for k >= 1 only");
  if (order < 0) throw UsageError("phi_k: order must be non-negative");
  const RhoTable rho(g, beta, -k, std::max(order - k, 0), quantum_terms);
  PhiSeries p = phi_from_rho(rho, k, order);
  p.approximate = g.is_quantum();
  return p;
}

XSeries euler_apply(const XSeries& s) {
  return s.map_terms([](std::int64_t e) { return Rational(static_cast<long>(e)); });
}

PhiSeries euler_apply(const PhiSeries& p) {
  PhiSeries out = p;
  out.series = euler_apply(p.series);
  return out;
}

IdentityReport check_residual(std::string name, int k, const XSeries& residual, int lead_exp,
                              const std::optional<Rational>& tolerance) {
  IdentityReport r;
  r.identity = std::move(name);
  r.k = k;
  r.approximate = tolerance.has_value();
  r.max_abs_residual = Rational(0);
  const std::int64_t top = residual.precision();
  for (std::int64_t e = lead_exp; e <= top; ++e) {
    const Rational c = abs(residual.coeff(e));
    if (c > r.max_abs_residual) r.max_abs_residual = c;
    const bool bad = tolerance ? c > *tolerance : !c.is_zero();
    if (bad) {
      ++r.nonzero;
      if (!r.first_failure) r.first_failure = static_cast<int>(e - lead_exp);
    }
  }
  r.checked_through = static_cast<int>(top - lead_exp);
  r.passed = r.nonzero == 0 && r.checked_through >= 0;
  return r;
}

namespace {

std::optional<Rational> quantum_tolerance(bool approximate) {
  if (!approximate) return std::nullopt;
  return Rational(BigInt(1), BigInt(1'000'000'000));
}

} // namespace

IdentityReport check_recursion(const PhiSeries& phi_k, const PhiSeries& phi_km1) {
  if (phi_k.k < 2 || phi_km1.k != phi_k.k - 1) {
    throw UsageError("check_recursion needs phi_k with k >= 2 and phi_{k-1}");
  }
  const int k = phi_k.k;
  const XSeries lhs =
      phi_k.series.map_terms([&](std::int64_t e) { return phi_k.beta * Rational(static_cast<long>(e + k - 1)); });
  return check_residual("recursion", k, lhs - phi_km1.series, phi_k.lead_exp(),
                        quantum_tolerance(phi_k.approximate || phi_km1.approximate));
}

IdentityReport check_recursion(const WeightGen& g, const Rational& beta, int k, int order,
                               std::optional<int> quantum_terms) {
  if (k < 2) throw UsageError("check_recursion requires k >= 2");
  return check_recursion(phi_k(g, beta, k, order, quantum_terms), phi_k(g, beta, k - 1, order, quantum_terms));
}

IdentityReport check_spectral(const WeightGen& g, const PhiSeries& phi, std::optional<int> quantum_terms) {
  const int k = phi.k;
  // The top known coefficient only feeds x^{top+1}, which is beyond the
  // residual's precision; leaving it out avoids evaluating G needlessly.
  const auto stored = phi.series.stored();
  const std::int64_t prec = phi.series.precision();
  std::vector<Rational> body(stored.begin(), stored.end());
  if (!body.empty() && phi.series.valuation() + static_cast<std::int64_t>(body.size()) - 1 == prec) body.pop_back();
  const XSeries lower(phi.series.valuation(), std::move(body), prec - 1);
  const XSeries xg =
      lower.map_terms([&](std::int64_t e) {
             return evaluate_weight(g, phi.beta * Rational(static_cast<long>(e)), quantum_terms);
           }).shifted(1);
  const XSeries residual = xg - euler_apply(phi.series) - phi.series * Rational(k - 1);
  return check_residual("spectral", k, residual, phi.lead_exp(), quantum_tolerance(phi.approximate));
}

IdentityReport check_spectral(const WeightGen& g, const Rational& beta, int k, int order,
                              std::optional<int> quantum_terms) {
  return check_spectral(g, phi_k(g, beta, k, order, quantum_terms), quantum_terms);
}

Rational kappa(const WeightGen& g, const Rational& beta) {
  const auto* r = std::get_if<WeightGen::RationalGen>(&g.variant());
  if (!r) throw UsageError("kappa is defined for rational weight functions");
  Rational v = r->d.size() % 2 == 0 ? Rational(1) : Rational(-1);
  for (const auto& c : r->c) v *= beta * c;
  for (const auto& d : r->d) v /= beta * d;
  return v;
}

IdentityReport check_rational_ode(const WeightGen& g, const PhiSeries& phi) {
  const auto* r = std::get_if<WeightGen::RationalGen>(&g.variant());
  if (!r) throw UsageError("the cleared-denominator equation applies to rational weight functions");
  for (const auto& c : r->c) {
    if (c.is_zero()) throw UsageError("the cleared-denominator equation needs every c_l != 0");
  }
  const Rational& beta = phi.beta;
  const int k = phi.k;
  const Rational kap = kappa(g, beta);
  const XSeries upper = phi.series.map_terms([&](std::int64_t e) {
    Rational v(1);
    for (const auto& c : r->c) v *= Rational(static_cast<long>(e)) + Rational(1) / (beta * c);
    return v;
  });
  const XSeries lower = phi.series.map_terms([&](std::int64_t e) {
    Rational v(static_cast<long>(e + k - 1));
    for (const auto& d : r->d) v *= Rational(static_cast<long>(e - 1)) - Rational(1) / (beta * d);
    return v;
  });
  const XSeries residual = upper.shifted(1) * (-kap) + lower;
  return check_residual("rational_ode", k, residual, phi.lead_exp());
}

IdentityReport check_trivial_closed_form(const PhiSeries& phi) {
  std::vector<Rational> closed;
  Rational v = pow(phi.beta, 1 - phi.k);
  for (int j = 0; j <= phi.order; ++j) {
    if (j > 0) v /= Rational(j);
    closed.push_back(v);
  }
  const XSeries expected(phi.lead_exp(), std::move(closed), phi.series.precision());
  return check_residual("trivial_closed_form", phi.k, phi.series - expected, phi.lead_exp());
}

Rational vandermonde(std::span<const Rational> x) {
  Rational v(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  return v;
}

namespace {

void check_points(std::span<const Rational> x) {
  if (x.empty()) throw UsageError("determinantal representation needs at least one point");
  std::set<Rational> seen;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) {
      throw SingularError(ErrorCode::singular_input, "evaluation point x_" + std::to_string(i + 1) + " is zero");
    }
    if (!seen.insert(x[i]).second) {
      throw SingularError(ErrorCode::singular_input, "coincident evaluation points (x = " + x[i].str() + ")");
    }
  }
}

// Prefactor prod y_i^{n-1} t^{n(n-1)} / (Delta(y) t^{n(n-1)/2}) / prod rho_{-i}.
XSeries normalization(std::span<const Rational> y, const RhoTable& rho) {
  const int n = static_cast<int>(y.size());
  Rational c(1);
  for (const auto& yi : y) c *= pow(yi, n - 1);
  c /= vandermonde(y);
  for (int i = 1; i <= n; ++i) c /= rho[-i];
  return XSeries::monomial(c, static_cast<std::int64_t>(n) * (n - 1) / 2);
}

int reversal_sign(int n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

} // namespace

XSeries det_rep_literal(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                        std::optional<int> quantum_terms) {
  check_points(x);
  const int n = static_cast<int>(x.size());
  const RhoTable rho(g, beta, -n, std::max(order - 1, 0), quantum_terms);
  Matrix<XSeries> m(n, n);
  for (int i = 0; i < n; ++i) {
    const PhiSeries phi = phi_from_rho(rho, i + 1, order);
    for (int j = 0; j < n; ++j) m(i, j) = phi.series.scaled_argument(x[static_cast<std::size_t>(j)]);
  }
  return determinant_leibniz(m) * normalization(x, rho);
}

XSeries wronskian_literal(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                          std::optional<int> quantum_terms) {
  check_points(x);
  const int n = static_cast<int>(x.size());
  const RhoTable rho(g, beta, -n, std::max(order - 1, 0), quantum_terms);
  XSeries row = phi_from_rho(rho, n, order).series;
  Matrix<XSeries> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = row.scaled_argument(x[static_cast<std::size_t>(j)]);
    row = euler_apply(row);
  }
  const XSeries gamma = XSeries::monomial(pow(beta, n * (n - 1) / 2), 0);
  return determinant_leibniz(m) * normalization(x, rho) * gamma;
}

namespace {

TauRepresentation finish(XSeries literal, const Rational& beta, int n, int sign, bool approximate) {
  TauRepresentation t;
  t.beta_exponent = n * kRowCalibrationExponent;
  t.sign = sign;
  t.series = literal * (pow(beta, t.beta_exponent) * Rational(sign));
  t.value = t.series.eval(Rational(1));
  t.exact_through = static_cast<int>(t.series.precision());
  t.approximate = approximate;
  return t;
}

} // namespace

TauRepresentation tau_det_rep(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                              std::optional<int> quantum_terms) {
  return finish(det_rep_literal(g, beta, x, order, quantum_terms), beta, static_cast<int>(x.size()), 1,
                g.is_quantum());
}

TauRepresentation tau_wronskian(const WeightGen& g, const Rational& beta, std::span<const Rational> x, int order,
                                std::optional<int> quantum_terms) {
  const int n = static_cast<int>(x.size());
  return finish(wronskian_literal(g, beta, x, order, quantum_terms), beta, n, reversal_sign(n), g.is_quantum());
}

std::optional<Calibration> calibrate(const XSeries& literal, const Rational& beta) {
  const Rational c0 = literal.coeff(0);
  if (c0.is_zero()) return std::nullopt;
  const int sign = c0.sign();
  for (int e = -64; e <= 64; ++e) {
    if (pow(beta, e) * c0 * Rational(sign) == Rational(1)) return Calibration{sign, e};
  }
  return std::nullopt;
}

} // namespace htau
