#pragma once

#include <string>
#include <string_view>

#include "cykit/exact/polynomial.hpp"

namespace cykit::exact {

/// numerator / denominator in Q(x), always reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  /// x^k for any integer k.
  static RationalFunction x_power(int k);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  RationalFunction derivative() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

std::string to_string(const RationalFunction& r, std::string_view variable = "x");

}  // namespace cykit::exact
