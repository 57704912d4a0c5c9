#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace wshift {

// Exact arithmetic throughout the library. Values are kept canonical
// (reduced, positive denominator) after every constructor below.
using Rational = mpq_class;

/// Parses `integer`, `integer/positive-integer` or a terminating decimal
/// such as `0.75` into an exact rational. A leading sign is accepted.
/// Returns nullopt when the text is not a complete literal.
std::optional<Rational> parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Finite decimal expansion if one exists ("0.75"), nullopt otherwise.
std::optional<std::string> to_terminating_decimal(const Rational& value);

/// Nearest long double. Keeps the top 64 bits of numerator and denominator,
/// so the result carries a full x87 extended mantissa for huge moments.
long double to_long_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace wshift
