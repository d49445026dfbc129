#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbitalg {

// Arbitrary-precision scalars. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "+p" or "p/q" (decimal integers, q != 0).
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace orbitalg
