#include "cykit/exact/stirling.hpp"

#include <vector>

#include "cykit/error.hpp"

namespace cykit::exact {

Integer stirling_number(StirlingKind kind, int n, int j) {
  if (n < 0 || j < 0 || j > n) return 0;
  // Row-by-row recurrences:
  //   S(n, j) = S(n-1, j-1) + j S(n-1, j)
  //   s(n, j) = s(n-1, j-1) - (n-1) s(n-1, j)
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 1; k <= m; ++k) {
      const Integer prev_same = k < m ? row[static_cast<std::size_t>(k)] : Integer(0);
      const Integer& prev_left = row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] =
          kind == StirlingKind::second ? Integer(prev_left + k * prev_same) : Integer(prev_left - (m - 1) * prev_same);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(j)];
}

Rational stirling(StirlingKind kind, int n, int j) {
  if (j < 1 || j > n) {
    throw DomainError("Stirling index out of range: need 1 <= j <= n, got n=" + std::to_string(n) +
                      ", j=" + std::to_string(j));
  }
  return Rational(stirling_number(kind, n, j));
}

}  // namespace cykit::exact
