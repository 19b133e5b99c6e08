#include "cykit/exact/rational_function.hpp"

#include "cykit/error.hpp"

namespace cykit::exact {

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::x_power(int k) {
  if (k >= 0) return RationalFunction(Polynomial::monomial(1, k));
  return RationalFunction(Polynomial::constant(1), Polynomial::monomial(1, -k));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return RationalFunction(num_.derivative() * (Rational(1) / den_[0]));
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd small.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n1 = g1.degree() > 0 ? divmod(num_, g1).quotient : num_;
  Polynomial d2 = g1.degree() > 0 ? divmod(o.den_, g1).quotient : o.den_;
  Polynomial n2 = g2.degree() > 0 ? divmod(o.num_, g2).quotient : o.num_;
  Polynomial d1 = g2.degree() > 0 ? divmod(den_, g2).quotient : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

std::string to_string(const RationalFunction& r, std::string_view variable) {
  if (r.is_polynomial()) return to_string(r.numerator(), variable);
  return "(" + to_string(r.numerator(), variable) + ")/(" + to_string(r.denominator(), variable) + ")";
}

}  // namespace cykit::exact
