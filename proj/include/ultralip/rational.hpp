#pragma once

#include <gmpxx.h>

#include <string>

namespace ultralip {

// All scalars in the library are exact rationals. GMP keeps
// values canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" with arbitrary-precision integers.
// Throws ParseError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& r);

// Exact q^n for integer n (n may be negative; q must be nonzero then).
Rational rat_pow(const Rational& base, long exp);

Rational rat_abs(const Rational& r);

// 2^{-k} for k >= 0.
Rational pow2_inv(unsigned long k);

}  // namespace ultralip
