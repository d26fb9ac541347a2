#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tbern {

using Integer = mpz_class;

// GMP keeps mpq_class canonical (positive denominator, coprime parts) after
// every arithmetic operation; only raw construction from a numerator and a
// denominator needs an explicit canonicalize().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", optionally signed. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_canonical(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer multinomial(unsigned long k, unsigned long l, unsigned long m);

// Integer power with a possibly negative exponent (base must then be nonzero).
Rational power(const Rational& base, long exponent);

// p-adic valuation of a nonzero integer.
long valuation(const Integer& value, unsigned long p);

} // namespace tbern
