#include <algorithm>
#include <map>

#include "cykit/cystruct/cystruct.hpp"
#include "cykit/error.hpp"
#include "cykit/exact/linalg.hpp"
#include "cykit/frobenius/frobenius.hpp"
#include "cykit/opalg/weyl.hpp"

namespace cykit::cystruct {

namespace {

using Subset = std::vector<int>;
using WedgeVector = std::vector<RationalFunction>;

std::vector<Subset> subsets(int n, int p) {
  std::vector<Subset> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + p, true);
  do {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Wedge coordinates of the companion system Y' = A Y for y'''' = -sum a_k y^(k).
class WedgeSystem {
 public:
  WedgeSystem(const MonicOperator& op, int p) : n_(op.order()), basis_(subsets(n_, p)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    for (int k = 0; k < n_; ++k) last_row_.push_back(-op[k]);
  }

  std::size_t dimension() const { return basis_.size(); }

  // d/dx of sum_S c_S e_S
  WedgeVector derivative(const WedgeVector& c) const {
    WedgeVector out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      out[i] += c[i].derivative();
      const Subset& s = basis_[i];
      for (std::size_t l = 0; l < s.size(); ++l) {
        if (s[l] + 1 < n_) {
          add_replaced(out, s, l, s[l] + 1, c[i]);
        } else {
          for (int k = 0; k < n_; ++k)
            if (!last_row_[static_cast<std::size_t>(k)].is_zero())
              add_replaced(out, s, l, k, c[i] * last_row_[static_cast<std::size_t>(k)]);
        }
      }
    }
    return out;
  }

 private:
  // Adds c * e_{S with position l replaced by k}, sorted with its sign.
  void add_replaced(WedgeVector& out, const Subset& s, std::size_t l, int k, const RationalFunction& c) const {
    Subset t = s;
    t[l] = k;
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[i] == t[j]) return;
        if (t[i] > t[j]) sign = -sign;
      }
    std::sort(t.begin(), t.end());
    const std::size_t idx = index_.at(t);
    if (sign > 0)
      out[idx] += c;
    else
      out[idx] -= c;
  }

  int n_;
  std::vector<Subset> basis_;
  std::map<Subset, std::size_t> index_;
  std::vector<RationalFunction> last_row_;
};

void require_mum_quartic(const ThetaOperator& op) {
  if (op.order() != 4) throw PreconditionError("expected an order-4 operator");
  if (!frobenius::mum_check(op)) throw PreconditionError("operator is not MUM at x = 0");
}

}  // namespace

ThetaOperator exterior_annihilator(const ThetaOperator& op, int p, int x_power, int relation_order) {
  const MonicOperator monic = opalg::theta_to_monic(op);
  if (p < 1 || p > monic.order()) throw DomainError("exterior power out of range");
  const WedgeSystem system(monic, p);
  const std::size_t dim = system.dimension();
  std::vector<WedgeVector> v;
  v.emplace_back(dim);
  v[0][0] = RationalFunction::x_power(x_power);
  for (int m = 0; m < relation_order; ++m) v.push_back(system.derivative(v.back()));
  exact::Matrix<RationalFunction> a(dim, std::vector<RationalFunction>(static_cast<std::size_t>(relation_order)));
  std::vector<RationalFunction> rhs(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (int m = 0; m < relation_order; ++m) a[r][static_cast<std::size_t>(m)] = v[static_cast<std::size_t>(m)][r];
    rhs[r] = -v[static_cast<std::size_t>(relation_order)][r];
  }
  const auto c = exact::solve(std::move(a), rhs);
  if (!c) throw StructuralError("no relation of order " + std::to_string(relation_order) + " in the exterior power");
  std::vector<RationalFunction> coeffs(c->begin(), c->end());
  coeffs.emplace_back(Rational(1));
  return opalg::from_d_form(opalg::DOperator(std::move(coeffs)));
}

ThetaOperator exterior_square(const ThetaOperator& op) {
  require_mum_quartic(op);
  return exterior_annihilator(op, 2, 1, 5);
}

ThetaOperator wronskian_lift(const ThetaOperator& op) {
  require_mum_quartic(op);
  const MonicOperator monic = opalg::theta_to_monic(op);
  const RationalFunction r =
      RationalFunction(Rational(-3, 16)) * (monic[3] - RationalFunction(Rational(6)) * RationalFunction::x_power(-1));
  return exterior_annihilator(opalg::monic_to_theta(opalg::gauge_transform(monic, r)), 2, 1, 5);
}

ThetaOperator exterior_power_operator(const ThetaOperator& op, std::array<int, 3> indices) {
  require_mum_quartic(op);
  for (std::size_t i = 0; i < 3; ++i) {
    if (indices[i] < 0 || indices[i] > 3) throw DomainError("solution index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (indices[i] == indices[j]) throw DomainError("repeated solution index");
  }
  return exterior_annihilator(op, 3, 0, 4);
}

}  // namespace cykit::cystruct
