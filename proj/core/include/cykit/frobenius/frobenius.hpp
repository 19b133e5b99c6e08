#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cykit/exact/log_series.hpp"
#include "cykit/exact/power_series.hpp"
#include "cykit/opalg/operators.hpp"

namespace cykit::frobenius {

using exact::Integer;
using exact::LogSeries;
using exact::PowerSeries;
using exact::Rational;
using opalg::ThetaOperator;

/// Frobenius solutions at a point of maximal unipotent monodromy.
///
/// y_j = sum_{b<=j} u_{j-b}(x) log^b(x)/b! with y_0 = u_0 and the x^0
/// coefficient of every sub-leading part equal to zero.
struct FrobeniusBasis {
  std::vector<LogSeries> solutions;
  ThetaOperator source;
  /// Solutions are exact through x^order.
  int order = 0;
};

/// q = x * q_over_x, the Yukawa coupling K(q) = 1 + sum k_coeffs[m-1] q^m and
/// the instanton numbers N_1..N_M.
struct MirrorData {
  PowerSeries q_over_x;
  PowerSeries x_of_q;
  std::vector<Rational> k_coeffs;
  std::vector<Rational> instantons;
  Integer normalizer = 1;
};

struct InstantonNumbers {
  std::vector<Rational> values;
  /// lcm of the denominators of the values.
  Integer normalizer = 1;
};

struct EquivalenceTransformation {
  /// y0_B(x) = f(x) * y0_A(g(x))
  PowerSeries f;
  PowerSeries g;
};

/// True iff P_0 is a nonzero multiple of theta^k with k the operator order.
bool mum_check(const ThetaOperator& op);

/// The rational rho with P_0 = c (theta - rho)^k, if there is one.
std::optional<Rational> mum_exponent(const ThetaOperator& op);

/// Shifts theta by the exponent so that the result is MUM at x = 0 (its
/// solutions are x^{-rho} times the original ones). Throws PreconditionError
/// when P_0 has no k-fold rational root.
ThetaOperator mum_normalize(const ThetaOperator& op);

/// A_0 .. A_N of the power-series solution with A_0 = 1, from
/// sum_j P_j(m - j) A_{m-j} = 0. Needs P_0(0) = 0 and P_0(m) != 0 for
/// 1 <= m <= N (MUM is not required); throws PreconditionError otherwise.
std::vector<Rational> analytic_coefficients(const ThetaOperator& op, int n_max);

/// Throws PreconditionError for non-MUM input.
FrobeniusBasis frobenius_basis(const ThetaOperator& op, int order = exact::kDefaultOrder);

/// q_over_x and x_of_q only.
MirrorData mirror_map(const ThetaOperator& op, int order = exact::kDefaultOrder);

/// Mirror map plus K(q) and instanton numbers; order-4 MUM operators only.
MirrorData yukawa_coupling(const ThetaOperator& op, int order = exact::kDefaultOrder);

/// Mobius inversion of c_m = sum_{d|m} d^3 N_d; k_coeffs[m-1] is c_m.
InstantonNumbers instanton_numbers(std::span<const Rational> k_coeffs);

/// Same K(q) through q^order.
bool equivalent_k(const ThetaOperator& a, const ThetaOperator& b, int order = 12);

/// g = x_of_q_A(q_B(x)) and f = y0_B / y0_A(g). Throws PreconditionError when
/// `require_equivalent` is set and the Yukawa couplings differ, and
/// StructuralError when y_1 does not transform with the same (f, g).
EquivalenceTransformation equivalence_transformation(const ThetaOperator& a, const ThetaOperator& b,
                                                     int order = 12, bool require_equivalent = true);

/// Extra equations demanded beyond the number of unknowns.
inline constexpr int kAnnihilatorGuard = 10;

/// Smallest operator (order first, then degree) with P_0 != 0 annihilating
/// sum seq[n] x^n through every supplied term, or nullopt. Throws
/// PreconditionError when fewer than (k_max+1)(d_max+1)+guard terms are given.
std::optional<ThetaOperator> series_annihilator(std::span<const Rational> seq, int k_max, int d_max);

}  // namespace cykit::frobenius
