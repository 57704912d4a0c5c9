#include "wshift/rational.hpp"

#include <cctype>
#include <cmath>

namespace wshift {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Splits a large integer into mantissa-sized chunk plus binary exponent.
long double scaled(const mpz_class& z, long& exponent) {
  mpz_class mag = abs(z);
  const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  exponent = 0;
  if (bits > 64) {
    exponent = static_cast<long>(bits - 64);
    mag >>= exponent;
  }
  const long double out = static_cast<long double>(mpz_get_ui(mag.get_mpz_t()));
  return z < 0 ? -out : out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    const mpz_class d{std::string(den), 10};
    if (d == 0) return std::nullopt;
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
    value = Rational(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(mpz_class(std::string(text), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<std::string> to_terminating_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  if (twos == 0 && fives == 0) return value.get_num().get_str();
  const unsigned long places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const mpz_class scaled_num = abs(value.get_num()) * scale / value.get_den();
  std::string digits = scaled_num.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  if (value < 0) digits.insert(0, "-");
  return digits;
}

long double to_long_double(const Rational& value) {
  if (value == 0) return 0.0L;
  long num_exp = 0;
  long den_exp = 0;
  const long double num = scaled(value.get_num(), num_exp);
  const long double den = scaled(value.get_den(), den_exp);
  return std::ldexp(num / den, static_cast<int>(num_exp - den_exp));
}

}  // namespace wshift
