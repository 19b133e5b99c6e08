#include "cykit/exact/rational.hpp"

#include <cctype>

#include "cykit/error.hpp"

namespace cykit::exact {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view digits) {
    if (digits.empty()) throw DomainError("empty integer in rational literal");
    std::size_t i = (digits.front() == '-' || digits.front() == '+') ? 1 : 0;
    if (i == digits.size()) throw DomainError("malformed rational literal");
    for (std::size_t k = i; k < digits.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(digits[k]))) {
        throw DomainError("malformed rational literal '" + std::string(digits) + "'");
      }
    }
    std::string s(digits.substr(digits.front() == '+' ? 1 : 0));
    return Integer(s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return 0;
  Rational num(1);
  for (long i = 0; i < k; ++i) num *= a - i;
  return num / Rational(factorial(static_cast<unsigned>(k)));
}

Rational pochhammer(const Rational& a, long n) {
  Rational p(1);
  for (long i = 0; i < n; ++i) p *= a + i;
  return p;
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / power(base, -exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace cykit::exact
