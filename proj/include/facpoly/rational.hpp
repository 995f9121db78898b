#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace facpoly {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25" or "-1.5e-3".
// The result is canonical. Throws ValidationError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow(const Rational& base, unsigned long exponent);

Rational factorial(unsigned long n);

Rational binomial(unsigned long n, unsigned long k);

} // namespace facpoly
