#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cykit/exact/rational_function.hpp"

namespace cykit::exact {

template <class Field>
using Matrix = std::vector<std::vector<Field>>;

namespace detail {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

// Cost used for pivot choice: smaller entries keep intermediate results small.
inline std::size_t weight(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}
inline std::size_t weight(const RationalFunction& r) {
  return static_cast<std::size_t>(r.numerator().degree() + r.denominator().degree());
}

/// In-place reduced row echelon form; returns pivot column per pivot row.
template <class Field>
std::vector<std::size_t> row_reduce(Matrix<Field>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = row; r < a.size(); ++r) {
      if (is_zero(a[r][col])) continue;
      if (!best || weight(a[r][col]) < weight(a[*best][col])) best = r;
    }
    if (!best) continue;
    std::swap(a[row], a[*best]);
    const Field inv = Field(1) / a[row][col];
    for (std::size_t c = col; c < a[row].size(); ++c) a[row][c] = a[row][c] * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const Field factor = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) {
        if (!is_zero(a[row][c])) a[r][c] = a[r][c] - factor * a[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Basis of the right nullspace {v : A v = 0}. Each basis vector has a 1 in
/// its free column and zeros in the other free columns.
template <class Field>
std::vector<std::vector<Field>> nullspace(Matrix<Field> a, std::size_t cols) {
  const auto pivots = detail::row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Field>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field> v(cols, Field(0));
    v[free] = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A c = b. Returns nullopt when the system is inconsistent; free
/// variables are set to zero.
template <class Field>
std::optional<std::vector<Field>> solve(Matrix<Field> a, const std::vector<Field>& b) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = detail::row_reduce(a, cols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r) {
    if (!detail::is_zero(a[r][cols])) return std::nullopt;
  }
  std::vector<Field> x(cols, Field(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace cykit::exact
