#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cykit::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p" or "p/q".
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" with decimal integers.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

/// Binomial coefficient C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for rational a, k >= 0.
Rational binomial(const Rational& a, long k);

/// Rising factorial (a)_n.
Rational pochhammer(const Rational& a, long n);

Rational power(const Rational& base, long exponent);

/// Least common multiple of denominators, gcd of numerators helpers.
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace cykit::exact
