#pragma once

#include "cykit/exact/rational.hpp"

namespace cykit::exact {

enum class StirlingKind { first, second };

/// Signed Stirling numbers of the first kind s(n, j) and Stirling numbers of
/// the second kind S(n, j):
///   theta^n = sum_j S(n, j) x^j D^j,   x^n D^n = sum_j s(n, j) theta^j.
/// Requires 1 <= j <= n, else DomainError.
Rational stirling(StirlingKind kind, int n, int j);

/// Same numbers with the convention S(0, 0) = s(0, 0) = 1 and zero for
/// j = 0 < n. Used by the operator conversions.
Integer stirling_number(StirlingKind kind, int n, int j);

}  // namespace cykit::exact
