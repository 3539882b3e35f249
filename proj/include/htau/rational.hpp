#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace htau {

using BigInt = mpz_class;

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// and GMP arithmetic keeps results canonical, so equality is structural.
class Rational {
public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(BigInt(std::to_string(v))) {}
  Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading sign on p. Whitespace is not
  /// accepted. Errors report the offending character position.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  /// Nearest double; diagnostics only, never used on the exact path.
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);

/// r^e for any integer e; e < 0 requires r != 0.
Rational pow(const Rational& r, long e);

/// n! as an exact integer-valued rational.
Rational factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace htau

namespace Eigen {

template <>
struct NumTraits<htau::Rational> : GenericNumTraits<htau::Rational> {
  using Real = htau::Rational;
  using NonInteger = htau::Rational;
  using Nested = htau::Rational;
  using Literal = htau::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

} // namespace Eigen
