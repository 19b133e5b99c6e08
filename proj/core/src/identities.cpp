#include <array>
#include <functional>

#include "cykit/cystruct/cystruct.hpp"
#include "cykit/error.hpp"
#include "cykit/frobenius/frobenius.hpp"

namespace cykit::cystruct {

namespace {

using exact::GaugeSeries;
using exact::LogSeries;
using exact::PowerSeries;

LogSeries wronskian(std::initializer_list<LogSeries> list) {
  const std::vector<LogSeries> v(list);
  return exact::log_wronskian(v);
}

class Checker {
 public:
  explicit Checker(int order) : order_(order) {}

  void check(std::string id, const LogSeries& lhs, const LogSeries& rhs) {
    const LogSeries diff = lhs - rhs;
    if (diff.precision() <= order_) throw Error("identity " + id + ": series precision too low for the check");
    IdentityReport report;
    report.id = std::move(id);
    report.residual_valuation = diff.truncated(order_ + 1).valuation();
    report.pass = !report.residual_valuation.has_value();
    reports_.push_back(std::move(report));
  }

  std::vector<IdentityReport> take() { return std::move(reports_); }

 private:
  int order_;
  std::vector<IdentityReport> reports_;
};

std::string numbered(const char* prefix, int i) {
  return std::string(prefix) + (i < 10 ? "0" : "") + std::to_string(i);
}

}  // namespace

std::vector<IdentityReport> verify_identities(const ThetaOperator& op, int order) {
  if (op.order() != 4) throw PreconditionError("identities are stated for order-4 operators");
  if (!frobenius::mum_check(op)) throw PreconditionError("operator is not MUM at x = 0");
  const int work = order + kIdentityPadding;
  const auto basis = frobenius::frobenius_basis(op, work);
  const auto& y = basis.solutions;
  const RationalFunction a3 = opalg::theta_to_monic(op)[3];
  const GaugeSeries f1 = exact::gauge_series(a3, Rational(-1, 2), work);
  const GaugeSeries f2 = exact::gauge_series(a3, Rational(-1), work);
  const GaugeSeries f3 = exact::gauge_series(a3, Rational(-3, 2), work);
  const Rational half(1, 2);
  const Rational quarter(1, 4);

  const std::array<LogSeries, 5> w = {
      wronskian({y[0], y[1]}).shifted(1),
      wronskian({y[0], y[2]}).shifted(1),
      wronskian({y[0], y[3]}).shifted(1),
      half * wronskian({y[1], y[3]}).shifted(1),
      half * wronskian({y[2], y[3]}).shifted(1),
  };

  Checker checker(order);

  struct Pair {
    int i, j;
    Rational c;
    std::function<LogSeries()> rhs;
  };
  const std::array<Pair, 10> pairs = {{
      {0, 1, 1, [&] { return y[0] * y[0]; }},
      {0, 2, 1, [&] { return y[0] * y[1]; }},
      {0, 3, half, [&] { return y[1] * y[1]; }},
      {0, 4, half, [&] { return y[1] * y[2] - y[0] * y[3]; }},
      {1, 2, 1, [&] { return y[0] * y[2]; }},
      {1, 3, half, [&] { return y[1] * y[2] + y[0] * y[3]; }},
      {1, 4, half, [&] { return y[2] * y[2]; }},
      {2, 3, half, [&] { return y[1] * y[3]; }},
      {2, 4, half, [&] { return y[2] * y[3]; }},
      {3, 4, quarter, [&] { return y[3] * y[3]; }},
  }};
  for (int n = 0; n < 10; ++n) {
    const Pair& p = pairs[static_cast<std::size_t>(n)];
    checker.check(numbered("W2-", n + 1), wronskian({w[static_cast<std::size_t>(p.i)], w[static_cast<std::size_t>(p.j)]}),
                  p.c * (p.rhs() * f1).shifted(2));
  }

  checker.check("W2-DUAL", w[2], wronskian({y[1], y[2]}).shifted(1));

  const std::array<std::array<int, 3>, 4> triples = {{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  for (int n = 0; n < 4; ++n) {
    const auto& t = triples[static_cast<std::size_t>(n)];
    checker.check(numbered("P3-", n + 1),
                  wronskian({y[static_cast<std::size_t>(t[0])], y[static_cast<std::size_t>(t[1])],
                             y[static_cast<std::size_t>(t[2])]}),
                  y[static_cast<std::size_t>(n)] * f1);
  }

  struct Triple {
    int i, j, k;
    Rational c;
    std::function<LogSeries()> rhs;
  };
  const std::array<Triple, 10> wtriples = {{
      {0, 1, 2, 1, [&] { return y[0] * y[0]; }},
      {0, 1, 3, 1, [&] { return y[0] * y[1]; }},
      {0, 1, 4, 1, [&] { return y[0] * y[2]; }},
      {0, 2, 3, half, [&] { return y[1] * y[1]; }},
      {0, 2, 4, half, [&] { return y[0] * y[3] + y[1] * y[2]; }},
      {0, 3, 4, half, [&] { return y[1] * y[3]; }},
      {1, 2, 3, half, [&] { return y[1] * y[2] - y[0] * y[3]; }},
      {1, 2, 4, half, [&] { return y[2] * y[2]; }},
      {1, 3, 4, half, [&] { return y[2] * y[3]; }},
      {2, 3, 4, quarter, [&] { return y[3] * y[3]; }},
  }};
  for (int n = 0; n < 10; ++n) {
    const Triple& t = wtriples[static_cast<std::size_t>(n)];
    checker.check(numbered("W3-", n + 1),
                  wronskian({w[static_cast<std::size_t>(t.i)], w[static_cast<std::size_t>(t.j)],
                             w[static_cast<std::size_t>(t.k)]}),
                  t.c * (t.rhs() * f2).shifted(3));
  }

  for (int skip = 4; skip >= 0; --skip) {
    std::vector<LogSeries> four;
    for (int i = 0; i < 5; ++i)
      if (i != skip) four.push_back(w[static_cast<std::size_t>(i)]);
    checker.check(numbered("W4-", 5 - skip), exact::log_wronskian(four),
                  (w[static_cast<std::size_t>(4 - skip)] * f3).shifted(3));
  }

  // d/dt = (1 / theta t) theta with t = y1 / y0
  const PowerSeries y0 = y[0].part(0);
  const PowerSeries tp = (y[1] / y0).theta().part(0);
  const auto d_dt = [&](const LogSeries& s) { return s.theta() / tp; };
  const LogSeries second = d_dt(d_dt(y[2] / y0));
  const PowerSeries y0sq = y0 * y0;
  const LogSeries one = LogSeries::from_series(PowerSeries::one(work));

  const LogSeries u_chain = (second * w[0] * w[0] * w[0]).shifted(-1) / y0sq;
  checker.check("U-SQUARE", u_chain, (LogSeries::from_series(y0sq) * f1).shifted(2));

  checker.check("CY2-EQUIV", second, (one * f1).shifted(3) / (y0sq * tp * tp * tp));

  return checker.take();
}

}  // namespace cykit::cystruct
