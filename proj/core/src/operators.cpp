#include "cykit/opalg/operators.hpp"

#include <algorithm>

#include "cykit/error.hpp"
#include "cykit/exact/stirling.hpp"

namespace cykit::opalg {

using exact::Integer;
using exact::LogSeries;
using exact::StirlingKind;

namespace {

const Polynomial& zero_polynomial() {
  static const Polynomial zero;
  return zero;
}

const RationalFunction& zero_function() {
  static const RationalFunction zero;
  return zero;
}

}  // namespace

ThetaOperator::ThetaOperator(std::vector<Polynomial> polys) : polys_(std::move(polys)) { trim(); }

ThetaOperator ThetaOperator::theta_power(int k) { return term(0, Polynomial::monomial(1, k)); }

ThetaOperator ThetaOperator::term(int i, const Polynomial& p) {
  if (i < 0) throw DomainError("negative x power in theta operator");
  std::vector<Polynomial> polys(static_cast<std::size_t>(i) + 1);
  polys.back() = p;
  return ThetaOperator(std::move(polys));
}

void ThetaOperator::trim() {
  while (!polys_.empty() && polys_.back().is_zero()) polys_.pop_back();
}

int ThetaOperator::order() const {
  int k = -1;
  for (const auto& p : polys_) k = std::max(k, p.degree());
  return k;
}

const Polynomial& ThetaOperator::coefficient(int i) const {
  if (i < 0 || i > degree()) return zero_polynomial();
  return polys_[static_cast<std::size_t>(i)];
}

ThetaOperator ThetaOperator::canonical() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& p : polys_)
    for (const auto& c : p.coefficients()) den = exact::lcm(den, c.get_den());
  Integer num = 0;
  for (const auto& p : polys_)
    for (const auto& c : p.coefficients()) num = exact::gcd(num, c.get_num());
  Rational scale = exact::make_rational(den, num);
  auto first = std::find_if(polys_.begin(), polys_.end(), [](const Polynomial& p) { return !p.is_zero(); });
  if (sgn(first->leading()) < 0) scale = -scale;
  ThetaOperator out = *this;
  out *= scale;
  return out;
}

ThetaOperator& ThetaOperator::operator+=(const ThetaOperator& o) {
  if (o.polys_.size() > polys_.size()) polys_.resize(o.polys_.size());
  for (std::size_t i = 0; i < o.polys_.size(); ++i) polys_[i] += o.polys_[i];
  trim();
  return *this;
}

ThetaOperator& ThetaOperator::operator-=(const ThetaOperator& o) {
  if (o.polys_.size() > polys_.size()) polys_.resize(o.polys_.size());
  for (std::size_t i = 0; i < o.polys_.size(); ++i) polys_[i] -= o.polys_[i];
  trim();
  return *this;
}

ThetaOperator& ThetaOperator::operator*=(const Rational& c) {
  for (auto& p : polys_) p *= c;
  trim();
  return *this;
}

DOperator::DOperator(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalFunction DOperator::coefficient(int j) const {
  if (j < 0 || j > order()) return zero_function();
  return coeffs_[static_cast<std::size_t>(j)];
}

DOperator& DOperator::operator+=(const DOperator& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

DOperator& DOperator::operator-=(const DOperator& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

// (a D^i)(b D^j) = a sum_l C(i,l) b^(l) D^(i-l+j)
DOperator operator*(const DOperator& a, const DOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RationalFunction> out(static_cast<std::size_t>(a.order() + b.order() + 1));
  for (int j = 0; j <= b.order(); ++j) {
    RationalFunction deriv = b.coeffs_[static_cast<std::size_t>(j)];
    for (int l = 0; l <= a.order(); ++l) {
      if (deriv.is_zero()) break;
      for (int i = l; i <= a.order(); ++i) {
        const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        out[static_cast<std::size_t>(i - l + j)] += ai * deriv * RationalFunction(Rational(exact::binomial(i, l)));
      }
      deriv = deriv.derivative();
    }
  }
  return DOperator(std::move(out));
}

DOperator to_d_form(const ThetaOperator& op) {
  const int k = op.order();
  if (k < 0) return {};
  std::vector<RationalFunction> out(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    // coefficient of D^j is sum_i x^{i+j} sum_n p_{i,n} S(n,j)
    std::vector<Rational> poly(static_cast<std::size_t>(op.degree() + j + 1));
    for (int i = 0; i <= op.degree(); ++i) {
      const auto& p = op.coefficient(i);
      Rational c = 0;
      for (int n = j; n <= p.degree(); ++n) {
        if (sgn(p[n]) == 0) continue;
        c += p[n] * Rational(exact::stirling_number(StirlingKind::second, n, j));
      }
      poly[static_cast<std::size_t>(i + j)] = c;
    }
    out[static_cast<std::size_t>(j)] = RationalFunction(Polynomial(std::move(poly)));
  }
  return DOperator(std::move(out));
}

ThetaOperator from_d_form(const DOperator& op) {
  if (op.is_zero()) return {};
  // r_j = c_j x^{-j}; the operator is sum_j r_j * (x^j D^j).
  std::vector<RationalFunction> r;
  Polynomial common = Polynomial::constant(1);
  for (int j = 0; j <= op.order(); ++j) {
    r.push_back(op.coefficient(j) * RationalFunction::x_power(-j));
    const auto& den = r.back().denominator();
    common = common * exact::divmod(den, exact::gcd(common, den)).quotient;
  }
  std::vector<Polynomial> nums;
  Polynomial g;
  for (const auto& rj : r) {
    nums.push_back(exact::divmod(rj.numerator() * common, rj.denominator()).quotient);
    g = exact::gcd(g, nums.back());
  }
  for (auto& n : nums) n = exact::divmod(n, g).quotient;
  int width = 0;
  for (const auto& n : nums) width = std::max(width, n.degree() + 1);
  std::vector<Polynomial> polys(static_cast<std::size_t>(width));
  for (int j = 0; j < static_cast<int>(nums.size()); ++j) {
    if (nums[static_cast<std::size_t>(j)].is_zero()) continue;
    const Polynomial ff = exact::falling_factorial(j);
    for (int i = 0; i <= nums[static_cast<std::size_t>(j)].degree(); ++i) {
      const Rational& c = nums[static_cast<std::size_t>(j)][i];
      if (sgn(c) != 0) polys[static_cast<std::size_t>(i)] += ff * c;
    }
  }
  return ThetaOperator(std::move(polys)).canonical();
}

MonicOperator theta_to_monic(const ThetaOperator& op) {
  if (op.is_zero()) throw DomainError("cannot normalise the zero operator");
  const DOperator d = to_d_form(op);
  const RationalFunction lead = d.leading();
  std::vector<RationalFunction> a;
  for (int j = 0; j < d.order(); ++j) a.push_back(d.coefficient(j) / lead);
  return MonicOperator(std::move(a));
}

ThetaOperator monic_to_theta(const MonicOperator& op) {
  std::vector<RationalFunction> c(op.coeffs().begin(), op.coeffs().end());
  c.emplace_back(Rational(1));
  return from_d_form(DOperator(std::move(c)));
}

LogSeries apply(const ThetaOperator& op, const LogSeries& y, const Rational& rho) {
  if (op.is_zero() || y.log_degree() < 0) return LogSeries(y.start(), y.precision(), {});
  int low = 0;
  while (op.coefficient(low).is_zero()) ++low;
  const int start = y.start() + low;
  const int precision = y.precision() + low;
  const int parts = y.log_degree() + 1;
  const int k = op.order();
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(parts),
                                         std::vector<Rational>(static_cast<std::size_t>(precision - start)));
  for (int i = low; i <= op.degree(); ++i) {
    const Polynomial& p = op.coefficient(i);
    if (p.is_zero()) continue;
    // Taylor coefficients P^(m)(rho + n) / m!, evaluated per exponent.
    for (int n = y.start(); n + i < precision; ++n) {
      const Polynomial taylor = p.shifted(rho + n);
      for (int j = 0; j < parts; ++j) {
        Rational acc = 0;
        for (int m = 0; m <= k && j + m < parts; ++m) {
          const Rational c = y.coefficient(j + m, n);
          if (sgn(c) != 0 && sgn(taylor[m]) != 0) acc += taylor[m] * c;
        }
        out[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + i - start)] += acc;
      }
    }
  }
  return LogSeries(start, precision, std::move(out));
}

}  // namespace cykit::opalg
