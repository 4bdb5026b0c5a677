#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tfn {

/// Exact scalar. GMP keeps every value in lowest terms with a positive
/// denominator, so equality and ordering are exact.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}

  /// 1-based column of the offending character inside the parsed text.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Parses "3", "-0.2806", "+1.5", "7/4" or "-3/8" exactly. Decimal input
/// never goes through floating point.
Rational parse_rational(std::string_view text);

/// Canonical reduced form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `places` digits.
std::string to_decimal(const Rational& value, int places = 6);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r{mpz_class(numerator), mpz_class(denominator)};
  r.canonicalize();
  return r;
}

}  // namespace tfn
