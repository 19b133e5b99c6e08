#include <numeric>

#include "cykit/error.hpp"
#include "cykit/frobenius/frobenius.hpp"

namespace cykit::frobenius {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// sigma = (y1 - y0 log x) / y0, which vanishes at x = 0.
PowerSeries sigma(const FrobeniusBasis& basis) {
  return basis.solutions[1].part(0) / basis.solutions[0].part(0);
}

MirrorData mirror_from_basis(const FrobeniusBasis& basis) {
  if (basis.solutions.size() < 2) throw PreconditionError("mirror map needs an operator of order at least 2");
  MirrorData out;
  out.q_over_x = exact::exp(sigma(basis));
  out.x_of_q = exact::series_reversion(out.q_over_x.shifted_up(1).truncated(basis.order));
  return out;
}

// K(x) = ((1/t') theta)^2 (y2/y0) with t' = theta(log q) = 1 + theta(sigma).
PowerSeries yukawa_in_x(const FrobeniusBasis& basis) {
  const PowerSeries tp = PowerSeries::one(basis.order) + exact::LogSeries::from_series(sigma(basis)).theta().part(0);
  const LogSeries ratio = basis.solutions[2] / basis.solutions[0].part(0);
  const LogSeries k = (ratio.theta() / tp).theta() / tp;
  if (k.log_degree() > 0) throw StructuralError("Yukawa coupling kept a logarithmic part");
  return k.part(0);
}

}  // namespace

MirrorData mirror_map(const ThetaOperator& op, int order) {
  return mirror_from_basis(frobenius_basis(op, order));
}

MirrorData yukawa_coupling(const ThetaOperator& op, int order) {
  if (op.order() != 4) throw PreconditionError("Yukawa coupling is defined for order-4 operators");
  const FrobeniusBasis basis = frobenius_basis(op, order);
  MirrorData out = mirror_from_basis(basis);
  const PowerSeries kq = yukawa_in_x(basis).compose(out.x_of_q);
  for (int m = 1; m <= kq.order(); ++m) out.k_coeffs.push_back(kq[m]);
  auto inst = instanton_numbers(out.k_coeffs);
  out.instantons = std::move(inst.values);
  out.normalizer = inst.normalizer;
  return out;
}

InstantonNumbers instanton_numbers(std::span<const Rational> k_coeffs) {
  InstantonNumbers out;
  const int size = static_cast<int>(k_coeffs.size());
  for (int m = 1; m <= size; ++m) {
    Rational acc = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const int mu = mobius(m / d);
      if (mu != 0) acc += mu * k_coeffs[static_cast<std::size_t>(d - 1)];
    }
    acc /= Rational(m) * m * m;
    out.normalizer = exact::lcm(out.normalizer, acc.get_den());
    out.values.push_back(acc);
  }
  return out;
}

bool equivalent_k(const ThetaOperator& a, const ThetaOperator& b, int order) {
  const auto ka = yukawa_coupling(a, order).k_coeffs;
  const auto kb = yukawa_coupling(b, order).k_coeffs;
  return ka == kb;
}

EquivalenceTransformation equivalence_transformation(const ThetaOperator& a, const ThetaOperator& b, int order,
                                                     bool require_equivalent) {
  if (require_equivalent && !equivalent_k(a, b, order)) throw PreconditionError("operators have different Yukawa couplings");
  // One extra order because log(g/x) loses a term.
  const int work = order + 1;
  const FrobeniusBasis ba = frobenius_basis(a, work);
  const FrobeniusBasis bb = frobenius_basis(b, work);
  const MirrorData ma = mirror_from_basis(ba);
  const MirrorData mb = mirror_from_basis(bb);
  const PowerSeries qb = mb.q_over_x.shifted_up(1).truncated(work);
  const PowerSeries g = ma.x_of_q.compose(qb);
  const PowerSeries y0a = ba.solutions[0].part(0);
  const PowerSeries y0b = bb.solutions[0].part(0);
  const PowerSeries f = y0b / y0a.compose(g);
  const PowerSeries ua = ba.solutions[1].part(0);
  const PowerSeries ub = bb.solutions[1].part(0);
  const PowerSeries predicted = y0b * exact::log(g.shifted_down(1)) + f * ua.compose(g);
  if (predicted.truncated(order) != ub.truncated(order))
    throw StructuralError("y1 does not transform with the same (f, g)");
  return {f.truncated(order), g.truncated(order)};
}

}  // namespace cykit::frobenius
