#include "cykit/opalg/weyl.hpp"

#include "cykit/error.hpp"

namespace cykit::opalg {

ThetaOperator weyl_multiply(const ThetaOperator& a, const ThetaOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> out(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  // (x^i A(theta)) (x^j B(theta)) = x^{i+j} A(theta + j) B(theta)
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coefficient(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coefficient(j).is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += a.coefficient(i).shifted(j) * b.coefficient(j);
    }
  }
  return ThetaOperator(std::move(out));
}

RightDivision right_divide(const DOperator& l, const DOperator& r) {
  if (r.is_zero()) throw DomainError("right division by the zero operator");
  RightDivision out;
  DOperator rem = l;
  const RationalFunction lead = r.leading();
  while (!rem.is_zero() && rem.order() >= r.order()) {
    const int shift = rem.order() - r.order();
    std::vector<RationalFunction> term(static_cast<std::size_t>(shift) + 1);
    term.back() = rem.leading() / lead;
    const DOperator t(std::move(term));
    rem -= t * r;
    out.quotient += t;
  }
  out.remainder = std::move(rem);
  out.exact = out.remainder.is_zero();
  if (out.exact && !out.quotient.is_zero()) out.quotient_theta = from_d_form(out.quotient);
  return out;
}

RightDivision weyl_right_divide(const ThetaOperator& l, const ThetaOperator& r) {
  return right_divide(to_d_form(l), to_d_form(r));
}

ThetaOperator theta_shift(const ThetaOperator& op, const Rational& c) {
  std::vector<Polynomial> polys;
  for (const auto& p : op.polys()) polys.push_back(p.shifted(c));
  return ThetaOperator(std::move(polys));
}

MonicOperator gauge_transform(const MonicOperator& op, const RationalFunction& r) {
  if (op.order() != 4) throw PreconditionError("gauge_transform expects an order-4 operator");
  const RationalFunction r1 = r.derivative();
  const RationalFunction r2 = r1.derivative();
  const RationalFunction r3 = r2.derivative();
  const RationalFunction f1 = r;
  const RationalFunction f2 = r1 + r * r;
  const RationalFunction f3 = r2 + Rational(3) * r * r1 + r * r * r;
  const RationalFunction f4 =
      r3 + Rational(4) * r * r2 + Rational(3) * r1 * r1 + Rational(6) * r * r * r1 + r * r * r * r;
  const auto& a0 = op[0];
  const auto& a1 = op[1];
  const auto& a2 = op[2];
  const auto& a3 = op[3];
  return MonicOperator({
      f4 + a3 * f3 + a2 * f2 + a1 * f1 + a0,
      Rational(4) * f3 + Rational(3) * a3 * f2 + Rational(2) * a2 * f1 + a1,
      Rational(6) * f2 + Rational(3) * a3 * f1 + a2,
      Rational(4) * f1 + a3,
  });
}

}  // namespace cykit::opalg
