#include "doctest.h"

#include "cykit/error.hpp"
#include "cykit/exact/log_series.hpp"
#include "cykit/opalg/operators.hpp"
#include "cykit/opalg/weyl.hpp"

using namespace cykit;
using namespace cykit::exact;
using namespace cykit::opalg;

namespace {
ThetaOperator theta() { return ThetaOperator({Polynomial{0, 1}}); }
ThetaOperator x() { return ThetaOperator({Polynomial{}, Polynomial{1}}); }
}  // namespace

TEST_CASE("Weyl commutation theta x = x theta + x") {
  CHECK(weyl_multiply(theta(), x()) == weyl_multiply(x(), theta()) + x());
  // theta^2 x = x (theta+1)^2
  const auto lhs = weyl_multiply(weyl_multiply(theta(), theta()), x());
  CHECK(lhs == ThetaOperator({Polynomial{}, Polynomial{1, 2, 1}}));
}

TEST_CASE("order, degree and canonical form") {
  const ThetaOperator L({Polynomial{0, 0, 6}, Polynomial{-3, -9}});
  CHECK(L.order() == 2);
  CHECK(L.degree() == 1);
  const auto c = L.canonical();
  CHECK(c.coefficient(0) == Polynomial{0, 0, 2});
  CHECK(c.coefficient(1) == Polynomial{-1, -3});
  CHECK(ThetaOperator({Polynomial{0, 0, Rational(-1, 2)}}).canonical() == ThetaOperator({Polynomial{0, 0, 1}}));
  CHECK(L.coefficient(7).is_zero());
}

TEST_CASE("D-form round trip") {
  const ThetaOperator L({Polynomial{0, 0, 0, 0, 1}, Polynomial{-24, -50, -35, -10, -1}, Polynomial{3, 0, 1}});
  CHECK(from_d_form(to_d_form(L)).canonical() == L.canonical());
  CHECK(monic_to_theta(theta_to_monic(L)).canonical() == L.canonical());
}

TEST_CASE("apply on log series") {
  // theta^2 kills 1 and log x.
  const auto T2 = weyl_multiply(theta(), theta());
  CHECK(apply(T2, LogSeries::log_power(1, 6)).truncated(6).is_zero());
  CHECK_FALSE(apply(T2, LogSeries::log_power(2, 6)).truncated(6).is_zero());
}

TEST_CASE("right division of a product is exact") {
  const ThetaOperator A({Polynomial{0, 1}, Polynomial{1, 1}});
  const ThetaOperator B({Polynomial{0, 0, 1}, Polynomial{-2}});
  const auto AB = weyl_multiply(A, B);
  const auto div = weyl_right_divide(AB, B);
  CHECK(div.exact);
  REQUIRE(div.quotient_theta);
  CHECK(weyl_multiply(*div.quotient_theta, B).canonical() == AB.canonical());

  const auto partial = weyl_right_divide(AB + x(), B);
  CHECK_FALSE(partial.exact);
  CHECK_THROWS_AS(weyl_right_divide(AB, ThetaOperator()), DomainError);
}

TEST_CASE("theta shift conjugates by x^c") {
  // (theta + 1) applied to x^{-1} f equals x^{-1} theta f.
  const ThetaOperator L({Polynomial{0, 1}, Polynomial{1}});
  const auto S = theta_shift(L, 1);
  CHECK(S.coefficient(0) == Polynomial{1, 1});
  CHECK(theta_shift(S, -1) == L);
}

TEST_CASE("gauge transform by zero is the identity") {
  const ThetaOperator L({Polynomial{0, 0, 0, 0, 1}, Polynomial{-1, -1}});
  const auto m = theta_to_monic(L);
  CHECK(gauge_transform(m, RationalFunction()) == m);
}
