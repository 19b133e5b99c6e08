#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cykit/exact/power_series.hpp"
#include "cykit/opalg/operators.hpp"

namespace cykit::cystruct {

using exact::Rational;
using exact::RationalFunction;
using opalg::MonicOperator;
using opalg::ThetaOperator;

/// a_3, a_2, a_1, a_0 of y'''' + a_3 y''' + a_2 y'' + a_1 y' + a_0 y.
struct ACoefficients {
  RationalFunction a3, a2, a1, a0;
};

/// b_4, ..., b_1 of the fifth-order equation; b_0 is not tied to the a_j.
struct BCoefficients {
  RationalFunction b4, b3, b2, b1;
};

ACoefficients a_coefficients(const MonicOperator& op);
BCoefficients b_coefficients(const MonicOperator& op);

/// C-Y2: a1 = a2 a3/2 - a3^3/8 + a2' - 3/4 a3 a3' - a3''/2. Order 4 only.
bool cy2_check(const ThetaOperator& op);
/// The fifth-order condition U = 0. Order 5 only.
bool cy5_check(const ThetaOperator& op);
/// U = -b2 + 3/2 b3' + 3/5 b3 b4 - b4'' - 6/5 b4 b4' - 4/25 b4^3.
RationalFunction u_condition(const BCoefficients& b);

/// Coefficients of the fifth-order equation of w = x W(y0, y1) from those of
/// a C-Y2 quartic. The relations are triangular and invert exactly.
BCoefficients b_from_a(const ACoefficients& a);
ACoefficients a_from_b(const BCoefficients& b);

/// Annihilator of x^x_power times the p-th exterior power coordinate
/// W(u_1, ..., u_p) for the solutions of the order-4 operator, via the
/// companion system on wedge coordinates. Throws StructuralError when no
/// relation of order `relation_order` exists.
ThetaOperator exterior_annihilator(const ThetaOperator& op, int p, int x_power, int relation_order);

/// Order-5 operator annihilating x W(y_i, y_j). Requires order 4 and MUM;
/// throws StructuralError when C-Y2 fails.
ThetaOperator exterior_square(const ThetaOperator& op);

/// Inverse of yang_pullback: the exterior square of the quartic whose
/// solutions are y exp(3/16 int(a3 - 6/x) dx). Agrees with exterior_square
/// when a3 = 6/x.
ThetaOperator wronskian_lift(const ThetaOperator& op);

/// Order-4 operator annihilating W(y_i, y_j, y_k). Any triple gives the same
/// operator; the indices are validated only. Requires MUM and C-Y2.
ThetaOperator exterior_power_operator(const ThetaOperator& op, std::array<int, 3> indices = {0, 1, 2});

/// The pullback quartic of a fifth-order operator satisfying U = 0, shifted
/// so that it is MUM (solutions multiplied by x^{5/2}).
ThetaOperator yang_pullback(const ThetaOperator& op);

/// The same quartic through gauge_transform(a_from_b(b), -1/(2x) + 3/10 b4)
/// and the x^{5/2} shift.
ThetaOperator yang_pullback_gauge(const ThetaOperator& op);

struct IdentityReport {
  std::string id;
  bool pass = false;
  /// First exponent where the two sides differ; empty when they agree
  /// through the checked precision.
  std::optional<int> residual_valuation;
};

/// Extra series terms computed beyond the verification order.
inline constexpr int kIdentityPadding = 10;

/// The 2x2, 3x3 and 4x4 Wronskian identities of a C-Y2 quartic, the
/// second expression for w2 (W2-DUAL), the double Wronskian square
/// (U-SQUARE) and the t-derivative form of C-Y2 (CY2-EQUIV), each checked
/// through x^order. Requires MUM; C-Y2 is not required so that failures can be
/// reported.
std::vector<IdentityReport> verify_identities(const ThetaOperator& op, int order = exact::kDefaultOrder);

}  // namespace cykit::cystruct
