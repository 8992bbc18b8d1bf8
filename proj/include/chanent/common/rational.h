#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chanent {

// Arbitrary precision rational used by every exact computation in the library.
using Rational = mpq_class;

// Parses "3/10", "-7", "0.125" or "1e-3" into an exact rational. Decimal input
// is interpreted exactly ("0.1" is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

// Exact conversion of a double (every finite double is a dyadic rational).
Rational rational_from_double(double value);

Rational pow(const Rational& base, long exponent);

inline double to_double(const Rational& value) { return value.get_d(); }

std::string to_string(const Rational& value);

}  // namespace chanent
