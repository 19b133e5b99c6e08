#pragma once

#include <optional>

#include "cykit/opalg/operators.hpp"

namespace cykit::opalg {

/// Product in the Weyl algebra Q<x, theta> with theta x = x theta + x.
/// Orders and degrees add; the result is not canonicalized.
ThetaOperator weyl_multiply(const ThetaOperator& a, const ThetaOperator& b);

struct RightDivision {
  DOperator quotient;
  DOperator remainder;
  bool exact = false;
  /// Canonical theta form of the quotient, set when the division is exact.
  std::optional<ThetaOperator> quotient_theta;
};

/// L = Q R + rem with order(rem) < order(R), by Euclidean elimination in
/// D-form over Q(x). Throws DomainError when R is zero.
RightDivision weyl_right_divide(const ThetaOperator& l, const ThetaOperator& r);
RightDivision right_divide(const DOperator& l, const DOperator& r);

/// theta -> theta + c in every P_i. If L annihilates y then the result
/// annihilates x^{-c} y.
ThetaOperator theta_shift(const ThetaOperator& op, const Rational& c);

/// Order-4 transformation y = f u with r = f'/f: the returned operator
/// annihilates y / f whenever `op` annihilates y.
MonicOperator gauge_transform(const MonicOperator& op, const RationalFunction& r);

}  // namespace cykit::opalg
