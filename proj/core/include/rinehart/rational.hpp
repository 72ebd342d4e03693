#pragma once

#include <gmpxx.h>

#include <string>

namespace rinehart {

/// Exact rational scalar. GMP maintains the canonical form the rest of the
/// code relies on: denominator > 0 and gcd(numerator, denominator) = 1.
using Rational = mpq_class;

/// n/d in canonical form. Throws std::invalid_argument when d = 0.
Rational make_rational(long n, long d = 1);

/// Accepts "7", "-7", "3/2", "-3/2". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

/// "3/2", "-3/2", "7" — integers render without a slash.
std::string to_string(const Rational& r);

/// r^e by repeated squaring, e >= 0.
Rational rational_pow(Rational r, unsigned long e);

/// True when r = t^2 for some rational t; writes the non-negative root.
/// Exactness matters: callers branch to numeric fallbacks when this fails.
bool rational_sqrt(const Rational& r, Rational& root);

/// Exact value of a finite double (every finite double is dyadic rational).
/// Throws std::invalid_argument on NaN or infinity.
Rational rational_from_double(double x);

double to_double(const Rational& r);

}  // namespace rinehart
