#include "cykit/cystruct/cystruct.hpp"

#include "cykit/error.hpp"

namespace cykit::cystruct {

namespace {

RationalFunction q(long num, long den = 1) { return RationalFunction(Rational(num, den)); }

// x^{-k}
RationalFunction xi(int k) { return RationalFunction::x_power(-k); }

RationalFunction d(const RationalFunction& f, int n = 1) {
  RationalFunction out = f;
  for (int i = 0; i < n; ++i) out = out.derivative();
  return out;
}

// b2 = a1 + k_term(a2, a3)
RationalFunction k_term(const RationalFunction& a2, const RationalFunction& a3) {
  return q(5, 2) * a2 * a3 + q(1, 4) * a3 * a3 * a3 + q(3, 2) * a3 * d(a3) + q(2) * d(a2) + d(a3, 2) -
         q(6) * a2 * xi(1) - q(21, 4) * a3 * a3 * xi(1) - q(6) * d(a3) * xi(1) + q(30) * a3 * xi(2) - q(60) * xi(3);
}

// b1 = -4 a0 + h_term(a2, a3)
RationalFunction h_term(const RationalFunction& a2, const RationalFunction& a3) {
  const RationalFunction a3sq = a3 * a3;
  return a2 * a2 + a2 * a3sq + a2 * d(a3) - q(3, 16) * a3sq * a3sq - q(15, 8) * a3sq * d(a3) + q(4) * a3 * d(a2) -
         q(9, 4) * a3 * d(a3, 2) + q(3) * d(a2, 2) - q(3, 2) * d(a3) * d(a3) - d(a3, 3) +
         (-q(6) * a2 * a3 - q(1, 4) * a3sq * a3 - q(3, 2) * a3 * d(a3) - q(6) * d(a2) - d(a3, 2)) * xi(1) +
         (q(12) * a2 + q(21, 2) * a3sq + q(12) * d(a3)) * xi(2) - q(60) * a3 * xi(3) + q(120) * xi(4);
}

// b3 = 2 a2 + b3_rest(a3)
RationalFunction b3_rest(const RationalFunction& a3) {
  return q(7, 4) * a3 * a3 + q(2) * d(a3) - q(10) * a3 * xi(1) + q(20) * xi(2);
}

}  // namespace

ACoefficients a_coefficients(const MonicOperator& op) {
  if (op.order() != 4) throw PreconditionError("expected an order-4 operator");
  return {op[3], op[2], op[1], op[0]};
}

BCoefficients b_coefficients(const MonicOperator& op) {
  if (op.order() != 5) throw PreconditionError("expected an order-5 operator");
  return {op[4], op[3], op[2], op[1]};
}

bool cy2_check(const ThetaOperator& op) {
  if (op.order() != 4) throw PreconditionError("cy2_check expects an order-4 operator");
  const auto a = a_coefficients(opalg::theta_to_monic(op));
  const RationalFunction rhs = q(1, 2) * a.a2 * a.a3 - q(1, 8) * a.a3 * a.a3 * a.a3 + d(a.a2) -
                               q(3, 4) * a.a3 * d(a.a3) - q(1, 2) * d(a.a3, 2);
  return a.a1 == rhs;
}

RationalFunction u_condition(const BCoefficients& b) {
  return -b.b2 + q(3, 2) * d(b.b3) + q(3, 5) * b.b3 * b.b4 - d(b.b4, 2) - q(6, 5) * b.b4 * d(b.b4) -
         q(4, 25) * b.b4 * b.b4 * b.b4;
}

bool cy5_check(const ThetaOperator& op) {
  if (op.order() != 5) throw PreconditionError("cy5_check expects an order-5 operator");
  return u_condition(b_coefficients(opalg::theta_to_monic(op))).is_zero();
}

BCoefficients b_from_a(const ACoefficients& a) {
  return {
      q(5, 2) * a.a3 - q(5) * xi(1),
      q(2) * a.a2 + b3_rest(a.a3),
      a.a1 + k_term(a.a2, a.a3),
      h_term(a.a2, a.a3) - q(4) * a.a0,
  };
}

ACoefficients a_from_b(const BCoefficients& b) {
  ACoefficients a;
  a.a3 = q(2) * xi(1) + q(2, 5) * b.b4;
  a.a2 = q(1, 2) * (b.b3 - b3_rest(a.a3));
  a.a1 = b.b2 - k_term(a.a2, a.a3);
  a.a0 = q(1, 4) * (h_term(a.a2, a.a3) - b.b1);
  return a;
}

}  // namespace cykit::cystruct
