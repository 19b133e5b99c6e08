#include "doctest.h"

#include "cykit/error.hpp"
#include "cykit/exact/rational.hpp"
#include "cykit/frobenius/frobenius.hpp"
#include "cykit/opalg/operators.hpp"
#include "cykit/opalg/weyl.hpp"

using namespace cykit;
using namespace cykit::exact;
using namespace cykit::frobenius;
using opalg::ThetaOperator;

namespace {
// theta^4 - 5x (5 theta+1)(5 theta+2)(5 theta+3)(5 theta+4)
ThetaOperator quintic() {
  const Polynomial p = Polynomial{1, 5} * Polynomial{2, 5} * Polynomial{3, 5} * Polynomial{4, 5};
  return ThetaOperator({Polynomial{0, 0, 0, 0, 1}, p * Rational(-5)});
}
}  // namespace

TEST_CASE("MUM detection") {
  CHECK(mum_check(quintic()));
  CHECK_FALSE(mum_check(ThetaOperator({Polynomial{0, 0, 0, 1, 1}, Polynomial{1}})));
  const auto shifted = opalg::theta_shift(quintic(), Rational(1, 2));
  CHECK_FALSE(mum_check(shifted));
  REQUIRE(mum_exponent(shifted));
  CHECK(mum_normalize(shifted) == quintic());
}

TEST_CASE("quintic Frobenius basis") {
  const auto basis = frobenius_basis(quintic(), 8);
  REQUIRE(basis.solutions.size() == 4);
  const auto y0 = basis.solutions[0].part(0);
  for (int n = 0; n <= 8; ++n) CHECK(y0[n] == Rational(factorial(5 * n)) / Rational(power(Rational(factorial(n)), 5)));
  for (const auto& y : basis.solutions) CHECK(opalg::apply(quintic(), y).truncated(8).is_zero());
  // Sub-leading parts start at x^1.
  CHECK(basis.solutions[1].part(0)[0] == 0);
  CHECK(analytic_coefficients(quintic(), 8) == std::vector<Rational>(y0.coefficients().begin(), y0.coefficients().end()));
}

TEST_CASE("quintic mirror map and instantons") {
  const auto m = yukawa_coupling(quintic(), 4);
  CHECK(m.q_over_x[1] == 770);
  CHECK(m.q_over_x[2] == 1014275);
  // Known genus-0 invariants 2875, 609250, 317206375 divided by the
  // normalization K(0) = 5.
  REQUIRE(m.instantons.size() >= 3);
  CHECK(m.instantons[0] == 575);
  CHECK(m.instantons[1] == 121850);
  CHECK(m.instantons[2] == 63441275);
  CHECK(m.normalizer == 1);
  CHECK(m.k_coeffs[0] == 575);
  CHECK(m.k_coeffs[1] == 975375);
  // x(q) inverts q(x).
  const auto q = (m.q_over_x.truncated(4)).shifted_up(1).truncated(4);
  CHECK(m.x_of_q.truncated(4).compose(q) == PowerSeries::identity(4));
}

TEST_CASE("instanton extraction by Moebius inversion") {
  // K = 1 + sum n^3 N_n q^n/(1-q^n) with N_1 = 1, N_2 = 0: k_m = 1 for all m.
  const std::vector<Rational> k(6, Rational(1));
  const auto n = instanton_numbers(k);
  CHECK(n.values[0] == 1);
  CHECK(n.values[1] == 0);
  CHECK(n.values[3] == 0);
}

TEST_CASE("equivalence with itself") {
  CHECK(equivalent_k(quintic(), quintic(), 6));
  const auto t = equivalence_transformation(quintic(), quintic(), 6);
  CHECK(t.f == PowerSeries::one(6));
  CHECK(t.g == PowerSeries::identity(6));
}

TEST_CASE("series annihilator recovers the quintic") {
  const auto seq = analytic_coefficients(quintic(), (4 + 1) * (1 + 1) + kAnnihilatorGuard + 2);
  const auto L = series_annihilator(seq, 4, 1);
  REQUIRE(L);
  CHECK(*L == quintic().canonical());
  CHECK_THROWS_AS(series_annihilator(std::span(seq).first(5), 4, 1), PreconditionError);
  // C(2n, n) needs order 1.
  std::vector<Rational> c;
  for (int n = 0; n < 30; ++n) c.emplace_back(binomial(2 * n, n));
  const auto L1 = series_annihilator(c, 2, 2);
  REQUIRE(L1);
  CHECK(L1->order() == 1);
}

TEST_CASE("analytic coefficients preconditions") {
  CHECK_THROWS_AS(analytic_coefficients(ThetaOperator({Polynomial{1, 1}, Polynomial{1}}), 4), PreconditionError);
}
