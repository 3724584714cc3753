#pragma once

#include <optional>
#include <string>

#include "quadstab/function_expr.hpp"
#include "quadstab/poly.hpp"

namespace quadstab::cli {

/// Parses the polynomial micro-grammar: rational coefficients, powers of x,
/// e.g. "3/2*x^2 - x" or "x^4 + 2". Decimal coefficients are converted
/// exactly ("0.25" -> 1/4). Throws std::invalid_argument on malformed input.
exact::Poly1 parse_poly1(const std::string& text);

/// A function given on the command line: either a raw polynomial (always
/// usable for symbolic and pointwise residuals) or one of the named forms
/// quadpow(a,eps0,p) / quadnoise(a,eta,seed).
struct ParsedFunction {
  std::optional<exact::Poly1> poly;
  std::optional<funceq::FunctionExpr> expr;

  /// Evaluator for pointwise work; prefers the expression when present.
  std::function<double(double)> evaluator() const;
};

ParsedFunction parse_function(const std::string& text);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

}  // namespace quadstab::cli
