#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cykit/exact/rational_function.hpp"

namespace cykit::exact {

/// Default truncation order for every series computation.
inline constexpr int kDefaultOrder = 20;

/// Truncated power series c_0 + c_1 x + ... + c_M x^M + O(x^{M+1}).
///
/// Binary operations return the smaller of the operand orders.
class PowerSeries {
 public:
  PowerSeries() : PowerSeries(0) {}
  explicit PowerSeries(int order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  PowerSeries(std::vector<Rational> coefficients, int order);

  static PowerSeries one(int order);
  /// The series x.
  static PowerSeries identity(int order);
  static PowerSeries from_polynomial(const Polynomial& p, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  /// Zero beyond the order.
  const Rational& operator[](int n) const;
  Rational& coefficient(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Index of the first nonzero coefficient, or -1 if all are zero.
  int valuation() const;
  bool is_zero() const { return valuation() < 0; }

  PowerSeries truncated(int order) const;
  /// x^k * this, known to order M + k.
  PowerSeries shifted_up(int k) const;
  /// this / x^k; requires the first k coefficients to vanish. Order drops by k.
  PowerSeries shifted_down(int k) const;

  PowerSeries derivative() const;
  /// Antiderivative with zero constant term; the order grows by one.
  PowerSeries integral() const;
  PowerSeries inverse() const;
  /// this(g(x)) for g(0) = 0.
  PowerSeries compose(const PowerSeries& g) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) { return a *= Rational(-1); }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  /// Requires b(0) != 0.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// exp(s) for s(0) = 0.
PowerSeries exp(const PowerSeries& s);
/// log(s) for s(0) = 1.
PowerSeries log(const PowerSeries& s);
/// s^alpha for s(0) = 1.
PowerSeries pow(const PowerSeries& s, const Rational& alpha);

/// Compositional inverse of s with s(0) = 0, s'(0) = 1. Throws
/// PreconditionError otherwise or when the order is below 2.
PowerSeries series_reversion(const PowerSeries& s);

/// Termwise product sum a_n b_n x^n.
PowerSeries hadamard_series(const PowerSeries& a, const PowerSeries& b);

struct LaurentExpansion {
  int valuation = 0;
  /// r = x^valuation * series, series(0) != 0 unless r == 0.
  PowerSeries series;
};

/// Expands r at x = 0 to order M.
LaurentExpansion laurent_expand(const RationalFunction& r, int order);

/// x^exponent * unit(x) with unit(0) = 1.
struct GaugeSeries {
  Rational exponent;
  PowerSeries unit;
};

/// exp(lambda * integral r dx) for r with at most a simple pole at 0.
/// Throws UnsupportedSingularity for poles of order >= 2.
GaugeSeries gauge_series(const RationalFunction& r, const Rational& lambda, int order);

}  // namespace cykit::exact
