#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cykit/cystruct/cystruct.hpp"
#include "cykit/diffops/difference.hpp"
#include "cykit/exact/power_series.hpp"
#include "cykit/opalg/operators.hpp"

namespace cykit::families {

using exact::Integer;
using exact::Polynomial;
using exact::PowerSeries;
using exact::Rational;
using opalg::ThetaOperator;

/// theta^2 - x Q(theta), names A..D.
struct HyperSecond {
  std::string name;
  Polynomial q;
};

/// theta^2 - x(a theta^2 + a theta + b) - c x^2 (theta+1)^2, names a..j.
struct DegreeTwoSecond {
  std::string name;
  Rational a, b, c;
  /// a theta^2 + a theta + b
  Polynomial p() const;
};

std::span<const HyperSecond> hyper_seconds();
std::span<const DegreeTwoSecond> degree_two_seconds();
/// Accepts "A" or "(A)". Throws NotFoundError.
const HyperSecond& hyper_second(std::string_view name);
/// Accepts "e" or "(e)". Throws NotFoundError.
const DegreeTwoSecond& degree_two_second(std::string_view name);

ThetaOperator second_order_operator(const HyperSecond& h);
ThetaOperator second_order_operator(const DegreeTwoSecond& s);

/// A_0 .. A_N of the analytic solution with A_0 = 1, from the order-2 operator.
std::vector<Rational> solution_sequence(const HyperSecond& h, int n_max);
std::vector<Rational> solution_sequence(const DegreeTwoSecond& s, int n_max);

/// theta^4 - x P Q - c x^2 Q(theta) Q(theta+1), canonical. Requires
/// deg P <= 2 and deg Q = 2.
ThetaOperator hadamard_2x2(const Polynomial& p, const Rational& c, const Polynomial& q);
/// (s) * (h) through hadamard_2x2.
ThetaOperator hadamard_product(const HyperSecond& h, const DegreeTwoSecond& s);

/// The two products dropped from the count of degree-2 equations: (C)*(h)
/// has K(q) = 1 and (C)*(e) is equivalent to a degree-1 equation.
bool hadamard_excluded(const HyperSecond& h, const DegreeTwoSecond& s);

/// theta^4 - x (2 theta+1)^2 P + c x^2 (theta+1)^2 (2 theta+1)(2 theta+3),
/// canonical. Requires deg P = 2.
ThetaOperator binom_lift_third(const Polynomial& p, const Rational& c);

/// A third-order equation lifted by C(2n, n); `big_table_id` is the printed
/// cross reference such as "16" or "4*".
struct BinomLiftRow {
  std::string name;
  std::string big_table_id;
  Polynomial p;
  Rational c;
};
std::span<const BinomLiftRow> binom_lift_rows();

/// theta^5 - c x (theta + a_1) ... (theta + a_5) with a_1 = 1/2,
/// a_3 = 1 - a_2 and a_5 = 1 - a_4.
struct HypergeometricQuinticSpec {
  Rational a2, a4, c;
  Rational alpha() const { return a2 - Rational(1, 2); }
  Rational beta() const { return a4 - Rational(1, 2); }
  std::vector<Rational> a() const;
  static HypergeometricQuinticSpec from_alpha_beta(const Rational& alpha, const Rational& beta, const Rational& c);
};

/// Canonical theta^5 - c x prod (theta + a_j). Throws PreconditionError when
/// c == 0.
ThetaOperator hypergeometric_quintic(const HypergeometricQuinticSpec& spec);

/// The closed-form pullback quartic, canonical.
ThetaOperator pullback_closed_form(const Rational& alpha, const Rational& beta, const Rational& c);

/// A row of the fourteen hypergeometric pullbacks.
struct TildeRow {
  int index;
  HypergeometricQuinticSpec spec;
  /// alpha and beta columns as printed.
  Rational alpha, beta;
};
std::span<const TildeRow> tilde_rows();
/// Throws NotFoundError outside 1..14.
const TildeRow& tilde_row(int index);

/// Exact double sum sum_n (cx)^n sum_k prod_j (a_j)_k (a_j)_{n-k} / (k!^5
/// (n-k)!^5) [1 + (2k-n)(-5 H_k + sum_j sum_{i<k} 1/(a_j + i))] through x^M.
PowerSeries theorem_double_sum(const HypergeometricQuinticSpec& spec, int order);

/// Checks (1 - cx) y0^2 against theorem_double_sum through x^order, where y0
/// is the Frobenius solution of pullback_closed_form.
cystruct::IdentityReport theorem_solution_check(const Rational& alpha, const Rational& beta, const Rational& c,
                                               int order);

/// The non-logarithmic part of w_1 = w_0 log x + sum (cx)^n/n!^5 prod (a_j)_n
/// (-5 H_n + sum_j (psi(n + a_j) - psi(a_j))).
PowerSeries quintic_w1_closed_form(const HypergeometricQuinticSpec& spec, int order);

/// The order-3 recursion satisfied by the squares of the (s) sequence.
diffops::DifferenceOperator hadamard_square_recursion(const Rational& a, const Rational& b, const Rational& c);

/// Names accepted by sequence_oracle.
std::span<const std::string> sequence_oracle_names();

/// A_0 .. A_N from the printed closed formulas. Names: "130", "D*j", "34",
/// "145", "155", "165", "214", "227", "228", "232". Throws NotFoundError.
std::vector<Rational> sequence_oracle(std::string_view name, int n_max);

}  // namespace cykit::families
