#pragma once

// Arbitrary-precision integer helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace m2z {

using Int = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer with optional leading sign. Throws ParseError.
Int parse_int(std::string_view text);

std::string to_string(const Int& value);

inline int sign(const Int& value) { return sgn(value); }

/// Nonnegative gcd; gcd(0, 0) == 0.
Int gcd(const Int& x, const Int& y);

Int pow(const Int& base, unsigned long exponent);

/// Floor of the square root; requires value >= 0.
Int isqrt(const Int& value);

/// True iff `divisor` divides `value` exactly (divisor 0 divides only 0).
bool divides(const Int& divisor, const Int& value);

/// Exact quotient; only valid when divides(divisor, value).
Int exact_div(const Int& value, const Int& divisor);

/// Hash usable for unordered containers keyed on big integers.
std::size_t hash_value(const Int& value);

}  // namespace m2z
