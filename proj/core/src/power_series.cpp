#include "cykit/exact/power_series.hpp"

#include <algorithm>

#include "cykit/error.hpp"

namespace cykit::exact {

namespace {
const Rational& zero() {
  static const Rational z(0);
  return z;
}
}  // namespace

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order) : coeffs_(std::move(coefficients)) {
  if (order < 0) throw DomainError("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

PowerSeries PowerSeries::identity(int order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int order) {
  return PowerSeries(std::vector<Rational>(p.coefficients().begin(), p.coefficients().end()), order);
}

const Rational& PowerSeries::operator[](int n) const {
  if (n < 0 || n > order()) return zero();
  return coeffs_[static_cast<std::size_t>(n)];
}

int PowerSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

PowerSeries PowerSeries::truncated(int order) const {
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                                 static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                                 order + 1)),
                     std::min(order, this->order()));
}

PowerSeries PowerSeries::shifted_up(int k) const {
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PowerSeries(std::move(v), order() + k);
}

PowerSeries PowerSeries::shifted_down(int k) const {
  for (int i = 0; i < k; ++i) {
    if (sgn((*this)[i]) != 0) throw DomainError("series is not divisible by x^" + std::to_string(k));
  }
  if (order() - k < 0) throw DomainError("series order too small to divide by x^" + std::to_string(k));
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()), order() - k);
}

PowerSeries PowerSeries::derivative() const {
  const int m = std::max(order() - 1, 0);
  PowerSeries d(m);
  for (int n = 1; n <= order(); ++n) d.coeffs_[static_cast<std::size_t>(n - 1)] = coeffs_[static_cast<std::size_t>(n)] * n;
  return d;
}

PowerSeries PowerSeries::integral() const {
  PowerSeries s(order() + 1);
  for (int n = 0; n <= order(); ++n) s.coeffs_[static_cast<std::size_t>(n + 1)] = coeffs_[static_cast<std::size_t>(n)] / Rational(n + 1);
  return s;
}

PowerSeries PowerSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw DomainError("series inverse needs a nonzero constant term");
  const int m = order();
  PowerSeries inv(m);
  const Rational c0 = Rational(1) / coeffs_[0];
  inv.coeffs_[0] = c0;
  for (int n = 1; n <= m; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
      if (sgn(coeffs_[static_cast<std::size_t>(k)]) != 0) acc += coeffs_[static_cast<std::size_t>(k)] * inv.coeffs_[static_cast<std::size_t>(n - k)];
    }
    inv.coeffs_[static_cast<std::size_t>(n)] = -acc * c0;
  }
  return inv;
}

PowerSeries PowerSeries::compose(const PowerSeries& g) const {
  if (sgn(g[0]) != 0) throw PreconditionError("composition needs g(0) = 0");
  const int m = std::min(order(), g.order());
  PowerSeries acc(m);
  for (int k = m; k >= 0; --k) {
    acc = acc * g;
    acc.coeffs_[0] += (*this)[k];
  }
  return acc.truncated(m);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int m = std::min(a.order(), b.order());
  PowerSeries r(m);
  for (int i = 0; i <= m; ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (sgn(ai) == 0) continue;
    for (int j = 0; i + j <= m; ++j) {
      const Rational& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (sgn(bj) != 0) r.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

PowerSeries exp(const PowerSeries& s) {
  if (sgn(s[0]) != 0) throw PreconditionError("exp needs a series with zero constant term");
  const int m = s.order();
  std::vector<Rational> e(static_cast<std::size_t>(m) + 1);
  e[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
      if (sgn(s[k]) != 0) acc += s[k] * k * e[static_cast<std::size_t>(n - k)];
    }
    e[static_cast<std::size_t>(n)] = acc / n;
  }
  return PowerSeries(std::move(e), m);
}

PowerSeries log(const PowerSeries& s) {
  if (s[0] != 1) throw PreconditionError("log needs a series with constant term 1");
  PowerSeries l = (s.derivative() / s.truncated(std::max(s.order() - 1, 0))).integral();
  return l.truncated(s.order());
}

PowerSeries pow(const PowerSeries& s, const Rational& alpha) {
  if (s[0] != 1) throw PreconditionError("pow needs a series with constant term 1");
  const int m = s.order();
  std::vector<Rational> p(static_cast<std::size_t>(m) + 1);
  p[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
      if (sgn(s[n - j]) != 0) acc += (alpha * (n - j) - j) * s[n - j] * p[static_cast<std::size_t>(j)];
    }
    p[static_cast<std::size_t>(n)] = acc / n;
  }
  return PowerSeries(std::move(p), m);
}

PowerSeries series_reversion(const PowerSeries& s) {
  if (s.order() < 2) throw PreconditionError("series reversion needs truncation order >= 2");
  if (sgn(s[0]) != 0 || s[1] != 1) throw PreconditionError("series reversion needs s(0) = 0 and s'(0) = 1");
  const int m = s.order();
  PowerSeries g = PowerSeries::identity(m);
  for (int n = 2; n <= m; ++n) {
    // With s'(0) = 1, raising g_n by delta raises [x^n] s(g) by delta.
    const PowerSeries h = s.truncated(n).compose(g.truncated(n));
    g.coefficient(n) -= h[n];
  }
  return g;
}

PowerSeries hadamard_series(const PowerSeries& a, const PowerSeries& b) {
  const int m = std::min(a.order(), b.order());
  PowerSeries r(m);
  for (int n = 0; n <= m; ++n) r.coefficient(n) = a[n] * b[n];
  return r;
}

LaurentExpansion laurent_expand(const RationalFunction& r, int order) {
  if (r.is_zero()) return {0, PowerSeries(order)};
  const Polynomial& num = r.numerator();
  const Polynomial& den = r.denominator();
  int vn = 0;
  while (sgn(num[vn]) == 0) ++vn;
  int vd = 0;
  while (sgn(den[vd]) == 0) ++vd;
  auto strip = [order](const Polynomial& p, int v) {
    std::vector<Rational> c;
    for (int i = v; i <= p.degree() && i - v <= order; ++i) c.push_back(p[i]);
    return PowerSeries(std::move(c), order);
  };
  return {vn - vd, strip(num, vn) / strip(den, vd)};
}

GaugeSeries gauge_series(const RationalFunction& r, const Rational& lambda, int order) {
  const LaurentExpansion e = laurent_expand(r, order);
  if (r.is_zero()) return {Rational(0), PowerSeries::one(order)};
  if (e.valuation <= -2) {
    throw UnsupportedSingularity("gauge factor needs at most a simple pole at x = 0");
  }
  Rational residue(0);
  // regular part of r to order M - 1
  PowerSeries regular(std::max(order - 1, 0));
  if (e.valuation == -1) {
    residue = e.series[0];
    for (int k = 0; k < order; ++k) regular.coefficient(k) = e.series[k + 1];
  } else {
    for (int k = e.valuation; k < order; ++k) regular.coefficient(k) = e.series[k - e.valuation];
  }
  PowerSeries integral = order == 0 ? PowerSeries(0) : regular.integral();
  return {lambda * residue, exp(integral * lambda).truncated(order)};
}

}  // namespace cykit::exact
