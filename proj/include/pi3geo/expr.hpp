#pragma once

// A small closed-form expression language.
//
// Grammar (whitespace ignored, byte offsets reported in errors):
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := "-" factor | power
//   power  := atom ("^" number)?
//   atom   := number | ident | ident "(" expr ")" | "(" expr ")"
//
// Functions: sinh cosh tanh sin cos exp ln sqrt abs asin.  Constants: pi, e
// (folded into literals at parse time).  Exponents must be numeric literals,
// so a power node always has a constant right child.
//
// ASTs can also be built programmatically with the overloaded operators below;
// variables are identified by name and merged across subexpressions.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pi3geo/jet.hpp"

namespace pi3 {

enum class UnaryOp { neg, sinh, cosh, tanh, sin, cos, exp, ln, sqrt, abs, asin };
enum class BinaryOp { add, sub, mul, div, pow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { constant, variable, unary, binary };
  Kind kind = Kind::constant;
  double value = 0.0;   // constant payload
  int var = -1;         // variable index
  UnaryOp uop = UnaryOp::neg;
  BinaryOp bop = BinaryOp::add;
  ExprPtr a, b;          // operands (unary uses a)
  int offset = -1;       // byte offset in source text, -1 when synthesized
};

/// Immutable expression tree plus its declared variable names.
class ExprAst {
 public:
  ExprAst() : root_(nullptr) {}

  /// Parses `text` over the given variable names.  Throws Error with code
  /// syntax_error / unknown_identifier / arity_error and a byte offset.
  static ExprAst parse(std::string_view text, const std::vector<std::string>& vars);

  static ExprAst constant(double v);
  static ExprAst variable(const std::string& name);

  bool empty() const { return root_ == nullptr; }
  const ExprPtr& root() const { return root_; }
  const std::vector<std::string>& vars() const { return vars_; }

  /// Univariate jet through third order.  `order` in 1..3; derivatives above
  /// `order` are reported as zero.  Requires at most one declared variable.
  Jet1 eval_jet1(double s, int order = 3) const;

  /// Bivariate jet through second order; the first declared variable is u,
  /// the second v.  Requires at most two declared variables.
  Jet2 eval_jet2(double u, double v) const;

  double value_at(double s) const { return eval_jet1(s, 1).value; }
  double value_at(double u, double v) const { return eval_jet2(u, v).value; }

  /// Re-parseable rendering with minimal parentheses.
  std::string to_string() const;

  /// Indented debug dump of the tree (node kinds, payloads, source offsets).
  std::string dump() const;

  /// Replaces every occurrence of the named variable with `replacement`.
  ExprAst substitute(const std::string& var, const ExprAst& replacement) const;

  // Programmatic construction.
  friend ExprAst operator+(const ExprAst& a, const ExprAst& b);
  friend ExprAst operator-(const ExprAst& a, const ExprAst& b);
  friend ExprAst operator*(const ExprAst& a, const ExprAst& b);
  friend ExprAst operator/(const ExprAst& a, const ExprAst& b);
  friend ExprAst operator-(const ExprAst& a);
  friend ExprAst apply_unary(UnaryOp op, const ExprAst& a);
  friend ExprAst pow(const ExprAst& a, double exponent);

 private:
  ExprAst(ExprPtr root, std::vector<std::string> vars)
      : root_(std::move(root)), vars_(std::move(vars)) {}

  ExprPtr root_;
  std::vector<std::string> vars_;
};

ExprAst operator+(const ExprAst& a, const ExprAst& b);
ExprAst operator-(const ExprAst& a, const ExprAst& b);
ExprAst operator*(const ExprAst& a, const ExprAst& b);
ExprAst operator/(const ExprAst& a, const ExprAst& b);
ExprAst operator-(const ExprAst& a);
ExprAst apply_unary(UnaryOp op, const ExprAst& a);
ExprAst pow(const ExprAst& a, double exponent);

inline ExprAst sinh(const ExprAst& a) { return apply_unary(UnaryOp::sinh, a); }
inline ExprAst cosh(const ExprAst& a) { return apply_unary(UnaryOp::cosh, a); }
inline ExprAst tanh(const ExprAst& a) { return apply_unary(UnaryOp::tanh, a); }
inline ExprAst sin(const ExprAst& a) { return apply_unary(UnaryOp::sin, a); }
inline ExprAst cos(const ExprAst& a) { return apply_unary(UnaryOp::cos, a); }
inline ExprAst exp(const ExprAst& a) { return apply_unary(UnaryOp::exp, a); }
inline ExprAst ln(const ExprAst& a) { return apply_unary(UnaryOp::ln, a); }
inline ExprAst sqrt(const ExprAst& a) { return apply_unary(UnaryOp::sqrt, a); }
inline ExprAst abs(const ExprAst& a) { return apply_unary(UnaryOp::abs, a); }
inline ExprAst asin(const ExprAst& a) { return apply_unary(UnaryOp::asin, a); }

}  // namespace pi3
