#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace iterlog {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms with positive denominator.
Rational make_rational(long num, long den = 1);

// "p/q" in lowest terms with q > 0, or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer factorial(long n);
Integer binomial(long n, long k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace iterlog
