#pragma once

#include <gmpxx.h>

#include <string>

namespace gybe {

// Exact rational with arbitrary-precision integer parts. GMP keeps mpq_class
// values canonical (den > 0, gcd(num, den) = 1) through all operators.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

std::string rat_to_string(const Rational& r);

// Parses "p" or "p/q"; throws gybe::Error on malformed input or q == 0.
Rational rat_from_string(const std::string& s);

double rat_to_double(const Rational& r);

// Conversion with a 64-bit mantissa, used by the complex embedding so the
// coefficient conversion does not dominate the error budget.
long double rat_to_long_double(const Rational& r);

}  // namespace gybe
