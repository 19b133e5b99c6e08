#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cykit/exact/polynomial.hpp"
#include "cykit/opalg/operators.hpp"

namespace cykit::diffops {

using exact::Integer;
using exact::Polynomial;
using exact::Rational;
using opalg::ThetaOperator;

/// R = sum_{i=0}^{r} q_i(n) N^i with (N f)(n) = f(n+1).
///
/// Acting on a sequence, (R A)(n) = sum_i q_i(n) A_{n+i}. The list never ends
/// in a zero polynomial.
class DifferenceOperator {
 public:
  DifferenceOperator() = default;
  explicit DifferenceOperator(std::vector<Polynomial> coeffs);

  /// -1 for the zero operator.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Polynomial> coeffs() const noexcept { return coeffs_; }
  /// q_i; zero beyond the order.
  const Polynomial& coefficient(int i) const;
  const Polynomial& leading() const;

  /// (R A)(n), with A_m = 0 outside the supplied range and for m < 0.
  Rational apply_at(std::span<const Rational> seq, long n) const;

  friend bool operator==(const DifferenceOperator& a, const DifferenceOperator& b) = default;

 private:
  void trim();
  std::vector<Polynomial> coeffs_;
};

/// L = sum_i x^{r-i} q_i(theta - i), not canonicalized. For y = sum A_n x^n
/// whose coefficients satisfy the recursion for every n >= 0, the coefficient
/// of x^m in L y vanishes for m >= r.
ThetaOperator diff_to_de(const DifferenceOperator& op);

/// Coefficients of x^0 .. x^{r-1} in diff_to_de(op) applied to sum A_n x^n;
/// only A_0 .. A_{r-1} contribute.
std::vector<Rational> boundary_terms(const DifferenceOperator& op, std::span<const Rational> initial);

/// r = degree(L) and q_{r-j}(n) = P_j(n + r - j).
DifferenceOperator de_to_diff(const ThetaOperator& op);

/// A_0 .. A_N from the r initial values. Throws PreconditionError when the
/// number of initial values differs from the order and EnumerationError when
/// q_r(n) vanishes at a required step n.
std::vector<Rational> holonomic_enumerate(const DifferenceOperator& op, std::span<const Rational> initial, int n_max);

/// Shift-invariant key of an integer quadratic a n^2 + b n + c.
struct QuadraticSignature {
  /// Content 1, positive leading coefficient.
  Polynomial q0;
  Integer a;
  Integer discriminant;
  /// b mod 2a; n -> n + s changes b by 2as.
  Integer b_canonical;
  friend bool operator==(const QuadraticSignature&, const QuadraticSignature&) = default;
};

/// Throws DomainError unless q has degree 2.
QuadraticSignature quadratic_signature(const Polynomial& q);

/// Strips the rational roots of the leading recursion coefficient that have
/// multiplicity >= 4 and keys the quadratic that remains; nullopt when the
/// residual factor is not quadratic.
std::optional<QuadraticSignature> superseeker_signature(const DifferenceOperator& op);
std::optional<QuadraticSignature> superseeker_signature(const ThetaOperator& op);

/// One row of the printed discriminant table.
struct SuperseekerRow {
  /// |D| column as printed.
  Integer printed_abs_d;
  /// D column evaluated from its printed factorization.
  Integer printed_d;
  /// Empty for the garbled row.
  std::optional<Polynomial> q0;
  /// Printed Q_0 text, kept verbatim for the garbled row.
  std::string q0_text;
  std::vector<std::string> ids;
  /// Degree column; nullopt for "?".
  std::optional<int> degree;
  bool garbled = false;
  /// Set when the printed D disagrees with the discriminant of the printed Q_0.
  std::string erratum;
};

std::span<const SuperseekerRow> superseeker_table();

/// Ids of every row whose Q_0 has the same (a, D, b mod 2a).
std::vector<std::string> superseeker_lookup(const QuadraticSignature& sig);

}  // namespace cykit::diffops
