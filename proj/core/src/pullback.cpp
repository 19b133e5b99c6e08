#include "cykit/cystruct/cystruct.hpp"
#include "cykit/error.hpp"
#include "cykit/frobenius/frobenius.hpp"
#include "cykit/opalg/weyl.hpp"

namespace cykit::cystruct {

namespace {

RationalFunction q(long num, long den = 1) { return RationalFunction(Rational(num, den)); }

BCoefficients checked_b(const ThetaOperator& op) {
  if (op.order() != 5) throw PreconditionError("expected an order-5 operator");
  if (!frobenius::mum_check(op)) throw PreconditionError("operator is not MUM at x = 0");
  const BCoefficients b = b_coefficients(opalg::theta_to_monic(op));
  if (!u_condition(b).is_zero()) throw PreconditionError("the fifth-order condition U = 0 does not hold");
  return b;
}

// Solutions of the intermediate quartic carry x^{-5/2}.
ThetaOperator finish(const MonicOperator& quartic) {
  return opalg::theta_shift(opalg::monic_to_theta(quartic), Rational(-5, 2)).canonical();
}

}  // namespace

ThetaOperator yang_pullback(const ThetaOperator& op) {
  const BCoefficients b = checked_b(op);
  const RationalFunction b4p = b.b4.derivative();
  const RationalFunction b3p = b.b3.derivative();
  const RationalFunction c3 = q(8, 5) * b.b4;
  const RationalFunction c2 = q(1, 2) * b.b3 + q(7, 5) * b4p + q(19, 25) * b.b4 * b.b4;
  const RationalFunction c1 = q(-3, 5) * b.b2 + q(7, 5) * b3p + q(19, 25) * b.b3 * b.b4;
  // b3 * b4' in the sixth term, as in the derivation.
  const RationalFunction c0 = q(-1, 4) * b.b1 + q(1, 10) * b.b2.derivative() + q(1, 25) * b.b2 * b.b4 +
                              q(9, 40) * b3p.derivative() + q(1, 16) * b.b3 * b.b3 + q(1, 25) * b.b3 * b4p +
                              q(23, 100) * b3p * b.b4 + q(9, 250) * b.b3 * b.b4 * b.b4;
  return finish(MonicOperator({c0, c1, c2, c3}));
}

ThetaOperator yang_pullback_gauge(const ThetaOperator& op) {
  const BCoefficients b = checked_b(op);
  const ACoefficients a = a_from_b(b);
  const RationalFunction r = q(-1, 2) * RationalFunction::x_power(-1) + q(3, 10) * b.b4;
  return finish(opalg::gauge_transform(MonicOperator({a.a0, a.a1, a.a2, a.a3}), r));
}

}  // namespace cykit::cystruct
