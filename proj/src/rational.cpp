#include "tfn/rational.hpp"

#include <cctype>

namespace tfn {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  return pos;
}

// Reads [sign] digits [. digits] starting at pos; returns numerator/10^k.
Rational parse_decimal(std::string_view text, std::size_t& pos, bool allow_fraction) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::size_t scale = 0;
  bool any = false;
  while (pos < text.size() && is_digit(text[pos])) {
    digits.push_back(text[pos++]);
    any = true;
  }
  if (allow_fraction && pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      digits.push_back(text[pos++]);
      ++scale;
      any = true;
    }
  }
  if (!any) throw ParseError("expected a number", pos + 1);
  mpz_class numerator(digits, 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, scale);
  Rational value(numerator, denominator);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = skip_space(text, 0);
  Rational value = parse_decimal(text, pos, true);
  pos = skip_space(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    pos = skip_space(text, pos + 1);
    const std::size_t den_col = pos + 1;
    Rational den = parse_decimal(text, pos, false);
    if (den <= 0) throw ParseError("denominator must be positive", den_col);
    value /= den;
    pos = skip_space(text, pos);
  }
  if (pos != text.size()) throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = value < 0;
  const Rational magnitude = abs(value);
  // round half away from zero: floor(|v| * 10^p + 1/2)
  Rational shifted = magnitude * scale + make_rational(1, 2);
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

}  // namespace tfn
