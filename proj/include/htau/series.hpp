#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "htau/errors.hpp"
#include "htau/rational.hpp"

namespace htau {

/// Power series c_0 + c_1 u + ... + c_D u^D truncated at a fixed order D.
///
/// Every operation truncates at D, so coefficient j of a product depends only
/// on coefficients <= j of the operands. Mixing orders is a usage error.
template <class Scalar>
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order = 0) : coeffs_(checked_size(order), Scalar(0)) {}

  /// Copies coefficients, zero-padding or dropping so that size is order + 1.
  TruncatedSeries(int order, std::span<const Scalar> coeffs) : coeffs_(checked_size(order), Scalar(0)) {
    const std::size_t n = std::min(coeffs.size(), coeffs_.size());
    std::copy_n(coeffs.begin(), n, coeffs_.begin());
  }

  TruncatedSeries(int order, std::initializer_list<Scalar> coeffs)
      : TruncatedSeries(order, std::span<const Scalar>(coeffs.begin(), coeffs.size())) {}

  static TruncatedSeries constant(int order, const Scalar& value) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
  }
  static TruncatedSeries one(int order) { return constant(order, Scalar(1)); }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  Scalar& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

  /// Drops every coefficient above the new (smaller or equal) order.
  TruncatedSeries truncated(int new_order) const {
    if (new_order > order()) {
      throw UsageError("cannot raise the order of a truncated series");
    }
    return TruncatedSeries(new_order, coeffs());
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  TruncatedSeries& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& s) { return a *= s; }
  friend TruncatedSeries operator*(const Scalar& s, TruncatedSeries a) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const int d = a.order();
    TruncatedSeries r(d);
    for (int i = 0; i <= d; ++i) {
      if (a[i] == Scalar(0)) continue;
      for (int j = 0; i + j <= d; ++j) {
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Multiplicative inverse modulo u^{D+1}.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == Scalar(0)) {
      throw SingularError(ErrorCode::singular_series, "series inverse requires a nonzero constant term");
    }
    const int d = order();
    TruncatedSeries r(d);
    const Scalar inv0 = Scalar(1) / coeffs_[0];
    r[0] = inv0;
    for (int n = 1; n <= d; ++n) {
      Scalar acc(0);
      for (int i = 1; i <= n; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * r[n - i];
      r[n] = -(acc * inv0);
    }
    return r;
  }

  /// Horner evaluation of the stored polynomial at v.
  Scalar eval(const Scalar& v) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw UsageError("series order must be non-negative");
    return static_cast<std::size_t>(order) + 1;
  }
  void require_same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) {
      throw UsageError("series orders differ: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
    }
  }

  std::vector<Scalar> coeffs_;
};

/// Formal power series in beta with exact rational coefficients.
using BetaSeries = TruncatedSeries<Rational>;

inline BetaSeries series_mul(const BetaSeries& a, const BetaSeries& b) { return a * b; }
inline BetaSeries series_inv(const BetaSeries& a) { return a.inverse(); }
inline Rational series_eval(const BetaSeries& a, const Rational& v) { return a.eval(v); }

/// Laurent series sum_{e >= valuation} c_e u^e whose coefficients are known
/// exactly through exponent precision(); higher coefficients are unknown.
///
/// Products and sums propagate the known range, so any coefficient that can
/// be read back is guaranteed to be unaffected by upstream truncation.
template <class Scalar>
class LaurentSeries {
public:
  static constexpr std::int64_t exact = std::int64_t{1} << 40;

  LaurentSeries() = default;

  /// Exact constant series.
  explicit LaurentSeries(const Scalar& c) : coeffs_{c} {}

  LaurentSeries(std::int64_t valuation, std::vector<Scalar> coeffs, std::int64_t precision)
      : valuation_(valuation), precision_(precision), coeffs_(std::move(coeffs)) {
    clip();
  }

  /// Exact monomial c * u^e.
  static LaurentSeries monomial(const Scalar& c, std::int64_t e) { return LaurentSeries(e, {c}, exact); }

  std::int64_t valuation() const noexcept { return valuation_; }
  std::int64_t precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_ >= exact; }

  /// Coefficient of u^e; reading above precision() is a usage error.
  Scalar coeff(std::int64_t e) const {
    if (e > precision_) {
      throw UsageError("coefficient of exponent " + std::to_string(e) + " is beyond the known precision " +
                       std::to_string(precision_));
    }
    if (e < valuation_ || e - valuation_ >= static_cast<std::int64_t>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
  }

  /// Raw stored coefficients starting at valuation().
  std::span<const Scalar> stored() const noexcept { return coeffs_; }

  /// Applies f(exponent) * c_e termwise, e.g. the Euler operator u d/du.
  template <class F>
  LaurentSeries map_terms(F&& f) const {
    LaurentSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      r.coeffs_[i] = f(valuation_ + static_cast<std::int64_t>(i)) * r.coeffs_[i];
    }
    return r;
  }

  /// Multiplication by u^s.
  LaurentSeries shifted(std::int64_t s) const {
    LaurentSeries r = *this;
    r.valuation_ += s;
    if (!is_exact()) r.precision_ += s;
    return r;
  }

  /// Substitutes u -> a*u (scales coefficient e by a^e).
  LaurentSeries scaled_argument(const Scalar& a) const {
    return map_terms([&](std::int64_t e) { return pow(a, static_cast<long>(e)); });
  }

  LaurentSeries& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend LaurentSeries operator*(LaurentSeries a, const Scalar& s) { return a *= s; }
  friend LaurentSeries operator*(const Scalar& s, LaurentSeries a) { return a *= s; }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, 1); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, -1); }
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  friend LaurentSeries operator-(const LaurentSeries& a) { return a * Scalar(-1); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
      // The zero series still limits precision through the other factor's support.
      const std::int64_t p = std::min(sat_add(a.precision_, b.valuation_), sat_add(b.precision_, a.valuation_));
      return LaurentSeries(a.valuation_ + b.valuation_, {}, p);
    }
    const std::int64_t v = a.valuation_ + b.valuation_;
    const std::int64_t p = std::min(sat_add(a.precision_, b.valuation_), sat_add(b.precision_, a.valuation_));
    const std::int64_t top = std::min<std::int64_t>(
        p, v + static_cast<std::int64_t>(a.coeffs_.size() + b.coeffs_.size()) - 2);
    std::vector<Scalar> out(static_cast<std::size_t>(std::max<std::int64_t>(top - v + 1, 0)), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const std::size_t k = i + j;
        if (k >= out.size()) break;
        out[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentSeries(v, std::move(out), p);
  }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  /// Sum of known coefficients evaluated at u = point (the truncated value).
  Scalar eval(const Scalar& point) const {
    Scalar acc(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      acc += coeffs_[i] * pow(point, static_cast<long>(valuation_ + static_cast<std::int64_t>(i)));
    }
    return acc;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.precision_ != b.precision_) return false;
    const std::int64_t lo = std::min(a.valuation_, b.valuation_);
    const std::int64_t hi = std::min(a.precision_, std::max(a.valuation_ + static_cast<std::int64_t>(a.coeffs_.size()),
                                                            b.valuation_ + static_cast<std::int64_t>(b.coeffs_.size())));
    for (std::int64_t e = lo; e <= hi; ++e) {
      if (a.coeff(e) != b.coeff(e)) return false;
    }
    return true;
  }

private:
  static std::int64_t sat_add(std::int64_t x, std::int64_t y) {
    if (x >= exact || y >= exact) return exact;
    return std::min(x + y, exact);
  }

  static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, int sign) {
    const std::int64_t v = std::min(a.valuation_, b.valuation_);
    const std::int64_t p = std::min(a.precision_, b.precision_);
    const std::int64_t top = std::min<std::int64_t>(
        p, std::max(a.valuation_ + static_cast<std::int64_t>(a.coeffs_.size()),
                    b.valuation_ + static_cast<std::int64_t>(b.coeffs_.size())) - 1);
    std::vector<Scalar> out(static_cast<std::size_t>(std::max<std::int64_t>(top - v + 1, 0)), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const std::int64_t k = a.valuation_ + static_cast<std::int64_t>(i) - v;
      if (k < static_cast<std::int64_t>(out.size())) out[static_cast<std::size_t>(k)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      const std::int64_t k = b.valuation_ + static_cast<std::int64_t>(i) - v;
      if (k >= static_cast<std::int64_t>(out.size())) continue;
      if (sign > 0) {
        out[static_cast<std::size_t>(k)] += b.coeffs_[i];
      } else {
        out[static_cast<std::size_t>(k)] -= b.coeffs_[i];
      }
    }
    return LaurentSeries(v, std::move(out), p);
  }

  // Drops stored coefficients above the precision.
  void clip() {
    if (is_exact()) return;
    const std::int64_t keep = precision_ - valuation_ + 1;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }

  std::int64_t valuation_ = 0;
  std::int64_t precision_ = exact;
  std::vector<Scalar> coeffs_;
};

} // namespace htau
