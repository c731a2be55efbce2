#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace trinomial {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "12", "-3/2" or "0.25" into an exact rational. Scientific notation,
// hex floats and anything else that is not an exact short decimal or a
// fraction is rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical GMP form: "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& value);

// True iff value = t^2 for some rational t >= 0; stores t when requested.
bool is_perfect_square(const Rational& value, Rational* root = nullptr);

bool is_integer(const Rational& value);

// True iff value is an odd multiple of 1/2.
bool is_half_integer(const Rational& value);

Rational rational_pow(const Rational& base, long exponent);

Integer binomial_exact(unsigned long n, unsigned long k);
Integer factorial_exact(unsigned long n);

// C(alpha, k) for rational alpha.
Rational binomial_rational(const Rational& alpha, unsigned long k);

}  // namespace trinomial
