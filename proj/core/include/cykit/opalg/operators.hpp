#pragma once

#include <span>
#include <vector>

#include "cykit/exact/log_series.hpp"
#include "cykit/exact/polynomial.hpp"
#include "cykit/exact/rational_function.hpp"

namespace cykit::opalg {

using exact::Polynomial;
using exact::Rational;
using exact::RationalFunction;

/// L = sum_{i=0}^{d} x^i P_i(theta) with theta = x d/dx.
///
/// Order k is the largest degree among the P_i and degree d the largest
/// power of x. The list never ends in a zero polynomial. Values are not
/// canonicalized on construction; see canonical().
class ThetaOperator {
 public:
  ThetaOperator() = default;
  explicit ThetaOperator(std::vector<Polynomial> polys);

  /// theta^k
  static ThetaOperator theta_power(int k);
  /// x^i * P(theta)
  static ThetaOperator term(int i, const Polynomial& p);

  int order() const;
  int degree() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  bool is_zero() const noexcept { return polys_.empty(); }
  /// P_i; zero beyond the degree.
  const Polynomial& coefficient(int i) const;
  std::span<const Polynomial> polys() const noexcept { return polys_; }

  /// Integer coefficients with content 1 and a positive leading coefficient
  /// of the lowest nonzero P_i (P_0 for every operator of interest).
  ThetaOperator canonical() const;

  ThetaOperator& operator+=(const ThetaOperator& o);
  ThetaOperator& operator-=(const ThetaOperator& o);
  ThetaOperator& operator*=(const Rational& c);
  friend ThetaOperator operator+(ThetaOperator a, const ThetaOperator& b) { return a += b; }
  friend ThetaOperator operator-(ThetaOperator a, const ThetaOperator& b) { return a -= b; }
  friend ThetaOperator operator*(ThetaOperator a, const Rational& c) { return a *= c; }
  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) = default;

 private:
  void trim();
  std::vector<Polynomial> polys_;
};

/// d^k/dx^k + sum_{j<k} a_j d^j/dx^j; coeffs()[j] is a_j.
class MonicOperator {
 public:
  MonicOperator() = default;
  explicit MonicOperator(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) {}

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const RationalFunction> coeffs() const noexcept { return coeffs_; }
  const RationalFunction& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  friend bool operator==(const MonicOperator& a, const MonicOperator& b) = default;

 private:
  std::vector<RationalFunction> coeffs_;
};

/// sum_j c_j(x) d^j/dx^j over the field Q(x), with no normalisation of the
/// leading coefficient. Used for Euclidean division.
class DOperator {
 public:
  DOperator() = default;
  explicit DOperator(std::vector<RationalFunction> coeffs);

  /// -1 for the zero operator.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const RationalFunction> coeffs() const noexcept { return coeffs_; }
  const RationalFunction& leading() const { return coeffs_.back(); }
  RationalFunction coefficient(int j) const;

  DOperator& operator+=(const DOperator& o);
  DOperator& operator-=(const DOperator& o);
  friend DOperator operator+(DOperator a, const DOperator& b) { return a += b; }
  friend DOperator operator-(DOperator a, const DOperator& b) { return a -= b; }
  /// Noncommutative product: D c(x) = c(x) D + c'(x).
  friend DOperator operator*(const DOperator& a, const DOperator& b);
  friend bool operator==(const DOperator& a, const DOperator& b) = default;

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

/// Expands every x^i P_i(theta) in the D-basis (theta^n = sum S(n,j) x^j D^j).
DOperator to_d_form(const ThetaOperator& op);

/// Clears denominators with the minimal polynomial multiplier and returns the
/// canonical theta form (x^j D^j = theta(theta-1)...(theta-j+1)).
ThetaOperator from_d_form(const DOperator& op);

/// Divides the D-form by its leading coefficient. Throws DomainError on the
/// zero operator.
MonicOperator theta_to_monic(const ThetaOperator& op);
ThetaOperator monic_to_theta(const MonicOperator& op);

/// Computes x^{-rho} L(x^rho y) in log-series arithmetic, i.e. applies the
/// operator to x^rho * y and strips the x^rho.
exact::LogSeries apply(const ThetaOperator& op, const exact::LogSeries& y, const Rational& rho = 0);

}  // namespace cykit::opalg
