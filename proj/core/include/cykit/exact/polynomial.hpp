#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cykit/exact/rational.hpp"

namespace cykit::exact {

/// Dense univariate polynomial over Q, lowest degree first. The stored list
/// never ends in a zero coefficient; the zero polynomial is empty.
///
/// The variable is not part of the value: the same type carries P_i(theta),
/// recurrence coefficients q_i(n) and x-polynomials. Rendering takes the
/// variable name explicitly.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int exponent);
  /// The identity polynomial t.
  static Polynomial variable();
  /// (t - root)
  static Polynomial linear_root(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^i; zero beyond the stored range.
  const Rational& operator[](int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;
  /// p(t + c), a Taylor shift.
  Polynomial shifted(const Rational& c) const;
  /// p(c t)
  Polynomial scaled(const Rational& c) const;
  /// p(q(t))
  Polynomial compose(const Polynomial& q) const;
  Polynomial monic() const;

  /// Positive rational c such that p / c has coprime integer coefficients.
  /// Zero for the zero polynomial.
  Rational content() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws DomainError on a zero divisor.
PolynomialDivision divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// t (t-1) ... (t-j+1); the empty product for j = 0.
Polynomial falling_factorial(int j);

/// Rational roots with multiplicities, sorted by root value.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

/// Human-readable form such as "3*T^2-T+1/2" in the given variable.
std::string to_string(const Polynomial& p, std::string_view variable = "T");

}  // namespace cykit::exact
