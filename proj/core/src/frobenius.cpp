#include <algorithm>

#include "cykit/error.hpp"
#include "cykit/exact/linalg.hpp"
#include "cykit/frobenius/frobenius.hpp"
#include "cykit/opalg/weyl.hpp"

namespace cykit::frobenius {

namespace {

// Truncated polynomials in epsilon, modulo epsilon^k.
using EpsSeries = std::vector<Rational>;

EpsSeries multiply(const EpsSeries& a, const EpsSeries& b) {
  const std::size_t k = a.size();
  EpsSeries out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < k; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

EpsSeries invert(const EpsSeries& a) {
  const std::size_t k = a.size();
  EpsSeries out(k);
  out[0] = 1 / a[0];
  for (std::size_t n = 1; n < k; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * out[n - i];
    out[n] = -acc * out[0];
  }
  return out;
}

// P(c + epsilon) mod epsilon^k
EpsSeries evaluate(const exact::Polynomial& p, const Rational& c, std::size_t k) {
  const exact::Polynomial s = p.shifted(c);
  EpsSeries out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = s[static_cast<int>(i)];
  return out;
}

}  // namespace

bool mum_check(const ThetaOperator& op) {
  if (op.is_zero()) return false;
  const auto& p0 = op.coefficient(0);
  const int k = op.order();
  if (p0.degree() != k || k < 1) return false;
  for (int i = 0; i < k; ++i)
    if (sgn(p0[i]) != 0) return false;
  return true;
}

std::optional<Rational> mum_exponent(const ThetaOperator& op) {
  if (op.is_zero()) return std::nullopt;
  const auto& p0 = op.coefficient(0);
  if (p0.degree() != op.order() || p0.degree() < 1) return std::nullopt;
  const auto roots = exact::rational_roots(p0);
  if (roots.size() != 1 || roots.front().second != p0.degree()) return std::nullopt;
  return roots.front().first;
}

ThetaOperator mum_normalize(const ThetaOperator& op) {
  const auto rho = mum_exponent(op);
  if (!rho) throw PreconditionError("indicial polynomial has no single rational root of full multiplicity");
  return opalg::theta_shift(op, *rho).canonical();
}

FrobeniusBasis frobenius_basis(const ThetaOperator& op, int order) {
  if (!mum_check(op)) throw PreconditionError("operator is not MUM at x = 0");
  if (order < 0) throw PreconditionError("negative truncation order");
  const std::size_t k = static_cast<std::size_t>(op.order());
  std::vector<EpsSeries> a;
  a.push_back(EpsSeries(k));
  a[0][0] = 1;
  for (int n = 1; n <= order; ++n) {
    EpsSeries rhs(k);
    for (int i = 1; i <= std::min(n, op.degree()); ++i) {
      if (op.coefficient(i).is_zero()) continue;
      const EpsSeries term = multiply(evaluate(op.coefficient(i), n - i, k), a[static_cast<std::size_t>(n - i)]);
      for (std::size_t e = 0; e < k; ++e) rhs[e] -= term[e];
    }
    a.push_back(multiply(invert(evaluate(op.coefficient(0), n, k)), rhs));
  }
  FrobeniusBasis basis;
  basis.source = op;
  basis.order = order;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Rational>> parts(j + 1, std::vector<Rational>(static_cast<std::size_t>(order) + 1));
    for (std::size_t b = 0; b <= j; ++b)
      for (std::size_t n = 0; n <= static_cast<std::size_t>(order); ++n) parts[b][n] = a[n][j - b];
    basis.solutions.emplace_back(0, order + 1, std::move(parts));
  }
  return basis;
}

std::optional<ThetaOperator> series_annihilator(std::span<const Rational> seq, int k_max, int d_max) {
  if (k_max < 1 || d_max < 0) throw PreconditionError("annihilator bounds must be k >= 1, d >= 0");
  const int needed = (k_max + 1) * (d_max + 1) + kAnnihilatorGuard;
  if (static_cast<int>(seq.size()) < needed)
    throw PreconditionError("series_annihilator needs at least " + std::to_string(needed) + " terms");
  const int terms = static_cast<int>(seq.size());
  for (int k = 1; k <= k_max; ++k) {
    for (int d = 0; d <= d_max; ++d) {
      // unknown p_{i,m}, column i*(k+1)+m; row n is [x^n] sum_i P_i(n-i) a_{n-i}
      const std::size_t cols = static_cast<std::size_t>((k + 1) * (d + 1));
      exact::Matrix<Rational> rows;
      for (int n = 0; n < terms; ++n) {
        std::vector<Rational> row(cols);
        for (int i = 0; i <= std::min(d, n); ++i) {
          const Rational& an = seq[static_cast<std::size_t>(n - i)];
          if (sgn(an) == 0) continue;
          Rational pw = an;
          for (int m = 0; m <= k; ++m) {
            row[static_cast<std::size_t>(i * (k + 1) + m)] = pw;
            pw *= n - i;
          }
        }
        rows.push_back(std::move(row));
      }
      for (const auto& v : exact::nullspace(std::move(rows), cols)) {
        std::vector<exact::Polynomial> polys;
        for (int i = 0; i <= d; ++i)
          polys.emplace_back(std::vector<Rational>(v.begin() + i * (k + 1), v.begin() + (i + 1) * (k + 1)));
        if (polys[0].is_zero()) continue;
        ThetaOperator op(std::move(polys));
        if (op.order() != k) continue;
        return op.canonical();
      }
    }
  }
  return std::nullopt;
}

std::vector<Rational> analytic_coefficients(const ThetaOperator& op, int n_max) {
  if (op.is_zero()) throw PreconditionError("zero operator has no analytic solution");
  const auto& p0 = op.coefficient(0);
  if (p0(Rational(0)) != 0) throw PreconditionError("P_0(0) != 0: no power-series solution with A_0 = 1");
  std::vector<Rational> a{1};
  for (int m = 1; m <= n_max; ++m) {
    const Rational lead = p0(Rational(m));
    if (lead == 0) throw PreconditionError("P_0(" + std::to_string(m) + ") = 0: analytic solution is not unique");
    Rational s = 0;
    for (int j = 1; j <= std::min(m, op.degree()); ++j)
      s += op.coefficient(j)(Rational(m - j)) * a[static_cast<std::size_t>(m - j)];
    a.push_back(-s / lead);
  }
  return a;
}

}  // namespace cykit::frobenius
