#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbell {

// Exact rational scalar used by every computation path.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a/b" or "a" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Renders "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

Integer factorial(unsigned long n);

// q^k for k >= 0, with 0^0 = 1.
Rational rational_pow(const Rational& q, unsigned long k);

}  // namespace pbell
