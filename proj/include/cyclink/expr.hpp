#pragma once

// Arithmetic expressions over tower generators: + - * / ^, parentheses,
// integer literals, identifiers and implicit multiplication ("2x", "x(y+1)").
// In algebra expressions the identifiers i and j are the symbol generators.

#include <memory>
#include <string>
#include <vector>

#include "cyclink/algebra.hpp"

namespace cyclink {

struct Expr {
  enum class Op { Num, Var, Neg, Add, Sub, Mul, Div, Pow };

  Op op = Op::Num;
  std::string text;  // literal digits or identifier
  long long exponent = 0;
  std::size_t pos = 0;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError naming the offending position.
ExprPtr parse_expr(const std::string& text);

/// Values: unknown identifiers raise ParseError, division by zero DivisionByZero.
FieldElem eval_field(const ExprPtr& e, const FieldTower& F);
AlgebraElement eval_algebra(const ExprPtr& e, const SymbolAlgebra& A);
/// A polynomial in `var` with coefficients in F (division by constants only).
Poly eval_poly(const ExprPtr& e, const FieldTower& F, const std::string& var);

FieldElem parse_field_elem(const std::string& text, const FieldTower& F);
AlgebraElement parse_algebra_elem(const std::string& text, const SymbolAlgebra& A);

}  // namespace cyclink
