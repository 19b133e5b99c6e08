#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cykit/exact/power_series.hpp"

namespace cykit::exact {

/// y = sum_j u_j(x) log(x)^j / j!, where the u_j are Laurent series sharing
/// one starting exponent. Every exponent strictly below `precision()` is
/// exact; the rest is O(x^precision).
class LogSeries {
 public:
  LogSeries() = default;
  /// parts[j][k] is the coefficient of x^{valuation + k} log^j / j!.
  LogSeries(int valuation, int precision, std::vector<std::vector<Rational>> parts);

  static LogSeries from_series(const PowerSeries& s);
  /// Parts given as power series; precision is min order + 1.
  static LogSeries from_parts(std::span<const PowerSeries> parts);
  /// log(x)^j / j!, exact to the given precision.
  static LogSeries log_power(int j, int precision);

  int start() const noexcept { return valuation_; }
  int precision() const noexcept { return precision_; }
  /// Largest j with a nonzero part, -1 for the zero series.
  int log_degree() const;
  /// Coefficient of x^exponent log^j / j!.
  Rational coefficient(int j, int exponent) const;
  /// u_j as a power series up to `precision() - 1`; requires start() >= 0
  /// or vanishing negative coefficients.
  PowerSeries part(int j) const;

  /// Lowest exponent carrying a nonzero coefficient below the precision.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  LogSeries derivative() const;
  /// x d/dx
  LogSeries theta() const;
  LogSeries shifted(int k) const;  // x^k * y
  LogSeries truncated(int precision) const;

  LogSeries& operator+=(const LogSeries& o);
  LogSeries& operator-=(const LogSeries& o);
  LogSeries& operator*=(const Rational& c);

  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(LogSeries a, const Rational& c) { return a *= c; }
  friend LogSeries operator*(const Rational& c, LogSeries a) { return a *= c; }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
  friend LogSeries operator*(const LogSeries& a, const PowerSeries& b);
  friend LogSeries operator*(const PowerSeries& b, const LogSeries& a) { return a * b; }
  /// Multiplication by x^rho * unit; rho must be an integer.
  friend LogSeries operator*(const LogSeries& a, const GaugeSeries& g);
  /// Division by a power series with nonzero constant term.
  friend LogSeries operator/(const LogSeries& a, const PowerSeries& b);

 private:
  void normalize();
  int valuation_ = 0;
  int precision_ = 0;
  std::vector<std::vector<Rational>> parts_;
};

/// Wronskian determinant det(d^i y_j / dx^i), 0 <= i, j < p. Throws
/// PreconditionError for an empty list or mixed precisions.
LogSeries log_wronskian(std::span<const LogSeries> solutions);

}  // namespace cykit::exact
