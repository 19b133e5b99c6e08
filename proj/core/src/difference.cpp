#include "cykit/diffops/difference.hpp"

#include <algorithm>

#include "cykit/error.hpp"

namespace cykit::diffops {

namespace {

const Polynomial& zero_polynomial() {
  static const Polynomial zero;
  return zero;
}

}  // namespace

DifferenceOperator::DifferenceOperator(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DifferenceOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Polynomial& DifferenceOperator::coefficient(int i) const {
  if (i < 0 || i > order()) return zero_polynomial();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Polynomial& DifferenceOperator::leading() const {
  if (is_zero()) throw DomainError("zero difference operator has no leading coefficient");
  return coeffs_.back();
}

Rational DifferenceOperator::apply_at(std::span<const Rational> seq, long n) const {
  Rational sum = 0;
  for (int i = 0; i <= order(); ++i) {
    long m = n + i;
    if (m < 0 || m >= static_cast<long>(seq.size())) continue;
    sum += coeffs_[static_cast<std::size_t>(i)](Rational(n)) * seq[static_cast<std::size_t>(m)];
  }
  return sum;
}

ThetaOperator diff_to_de(const DifferenceOperator& op) {
  int r = op.order();
  if (r < 0) return {};
  std::vector<Polynomial> polys(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) polys[static_cast<std::size_t>(r - i)] = op.coefficient(i).shifted(-i);
  return ThetaOperator(std::move(polys));
}

std::vector<Rational> boundary_terms(const DifferenceOperator& op, std::span<const Rational> initial) {
  int r = op.order();
  std::vector<Rational> out;
  for (int m = 0; m < r; ++m) out.push_back(op.apply_at(initial.first(std::min<std::size_t>(initial.size(), r)), m - r));
  return out;
}

DifferenceOperator de_to_diff(const ThetaOperator& op) {
  int r = op.degree();
  if (r < 0) return {};
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) coeffs[static_cast<std::size_t>(r - j)] = op.coefficient(j).shifted(r - j);
  return DifferenceOperator(std::move(coeffs));
}

std::vector<Rational> holonomic_enumerate(const DifferenceOperator& op, std::span<const Rational> initial, int n_max) {
  int r = op.order();
  if (r < 0) throw PreconditionError("cannot enumerate with the zero difference operator");
  if (static_cast<int>(initial.size()) != r)
    throw PreconditionError("expected " + std::to_string(r) + " initial values, got " + std::to_string(initial.size()));
  std::vector<Rational> seq(initial.begin(), initial.end());
  seq.resize(static_cast<std::size_t>(std::max(n_max + 1, r)));
  for (long n = 0; n + r <= n_max; ++n) {
    Rational lead = op.leading()(Rational(n));
    if (lead == 0) throw EnumerationError("leading recursion coefficient vanishes at n = " + std::to_string(n), n);
    Rational sum = 0;
    for (int i = 0; i < r; ++i)
      sum += op.coefficient(i)(Rational(n)) * seq[static_cast<std::size_t>(n + i)];
    seq[static_cast<std::size_t>(n + r)] = -sum / lead;
  }
  seq.resize(static_cast<std::size_t>(n_max + 1));
  return seq;
}

}  // namespace cykit::diffops
