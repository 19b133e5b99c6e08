#pragma once

#include <string>
#include <string_view>

#include "cykit/opalg/operators.hpp"

namespace cykit::cli {

using opalg::ThetaOperator;

enum class RenderStyle { theta, machine };

/// Parses an operator in the text grammar and returns its canonical form.
///
/// Symbols are `x` and `T` (theta), numbers are decimal integers, and
/// `+ - * / ^` and parentheses have the usual precedence with `^` binding
/// tightest. Products follow the Weyl algebra (T*x = x*(T+1)); division is
/// allowed by nonzero constants only; there is no implicit multiplication.
/// Text starting with `CYOP` is read as a machine record instead. Throws
/// ParseError.
ThetaOperator parse_operator(std::string_view text);

/// A polynomial in `variable` written in the same grammar, without `x`.
/// Coefficients are kept as written (no canonical scaling).
exact::Polynomial parse_polynomial(std::string_view text, char variable = 'n');

/// `theta` prints `T^4 + x*(...) + x^2*(...)`; `machine` prints the versioned
/// record `CYOP 1`, `order k degree d` and d+1 lines with the coefficients of
/// P_0 .. P_d, constant term first. parse_operator inverts both.
std::string render_operator(const ThetaOperator& op, RenderStyle style = RenderStyle::theta);

}  // namespace cykit::cli
