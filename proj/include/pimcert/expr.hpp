#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "pimcert/affine.hpp"
#include "pimcert/errors.hpp"

namespace pimcert {

// Immutable expression tree over named parameters.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := number | identifier | '(' expr ')'
// '^' binds tighter than unary minus, so -x^2 is -(x^2).  Exponents are
// unsigned integer literals; anything else is a ParseError.
class Expr {
 public:
  enum class Kind { Constant, Param, Neg, Add, Sub, Mul, Div, Pow };

  static Expr constant(double v);
  static Expr param(std::string name);
  static Expr neg(Expr e);
  static Expr add(Expr l, Expr r);
  static Expr sub(Expr l, Expr r);
  static Expr mul(Expr l, Expr r);
  static Expr div(Expr l, Expr r);
  static Expr pow(Expr base, unsigned exponent);

  Kind kind() const;
  double value() const;             // Constant
  const std::string& name() const;  // Param
  unsigned exponent() const;        // Pow
  Expr lhs() const;                 // Neg/Add/Sub/Mul/Div/Pow (operand/base)
  Expr rhs() const;                 // Add/Sub/Mul/Div

  // Structural equality (constants compare as doubles, exactly).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr binary(Kind k, Expr l, Expr r);
  std::shared_ptr<const Node> node_;
};

// Throws ParseError with the byte offset of the offending token.
Expr parse_expression(std::string_view text);

// Fully parenthesized rendering; parse_expression(to_string(e)) == e for any
// tree the parser can produce.  Constants print with 17 significant digits.
std::string to_string(const Expr& e);

// Point evaluation.  Unknown parameter -> UnboundParameter; division by an
// exact zero -> EvalError; x^0 == 1.
double eval_real(const Expr& e, const std::map<std::string, double>& values);

// Affine evaluation, depth-first, left operand before right; each nonlinear
// node draws fresh symbols from `alloc` in that order.
AffineForm eval_affine(const Expr& e,
                       const std::map<std::string, AffineForm>& env,
                       SymbolAllocator& alloc);

}  // namespace pimcert
