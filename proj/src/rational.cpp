#include "htau/rational.hpp"

#include <cctype>
#include <ostream>

#include "htau/errors.hpp"

namespace htau {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::usage: return "usage_error";
  case ErrorCode::parse: return "parse_error";
  case ErrorCode::singular_series: return "singular_series";
  case ErrorCode::singular_parameter: return "singular_parameter";
  case ErrorCode::singular_input: return "singular_input";
  case ErrorCode::scale_guard: return "scale_guard";
  case ErrorCode::overflow: return "overflow";
  }
  return "unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw UsageError("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw UsageError("division of a rational by zero");
  }
  value_ /= o.value_;
  return *this;
}

namespace {

// Reads [sign] digits starting at pos; advances pos past the digits.
BigInt read_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
  const std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    ++pos;
  }
  const std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == digits_start) {
    throw ParseError("invalid rational '" + std::string(text) + "': expected digit at position " +
                         std::to_string(pos),
                     pos);
  }
  std::string token(text.substr(start, pos - start));
  if (token.front() == '+') {
    token.erase(0, 1);
  }
  return BigInt(token, 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  const BigInt num = read_integer(text, pos, true);
  BigInt den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') {
      throw ParseError("invalid rational '" + std::string(text) + "': unexpected character at position " +
                           std::to_string(pos),
                       pos);
    }
    ++pos;
    const std::size_t den_pos = pos;
    den = read_integer(text, pos, false);
    if (pos != text.size()) {
      throw ParseError("invalid rational '" + std::string(text) +
                           "': unexpected character at position " + std::to_string(pos),
                       pos);
    }
    if (den == 0) {
      throw ParseError("invalid rational '" + std::string(text) + "': zero denominator at position " +
                           std::to_string(den_pos),
                       den_pos);
    }
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) {
      throw UsageError("negative power of zero");
    }
    return Rational(1) / pow(r, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace htau
