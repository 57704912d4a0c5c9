#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "wshift/polynomial.hpp"
#include "wshift/rational.hpp"

namespace wshift {

// Closed-form arithmetic in the index variable `n`:
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*
//   unary   := "-" unary | power
//   power   := primary ("^" integer)?
//   primary := number | "n" | "(" expr ")"
// Numbers are integers or terminating decimals, read exactly. The value set
// is the rational functions of n, which is what the tail analysis relies on.
class Expression {
 public:
  enum class Kind { kNumber, kVariable, kNegate, kAdd, kSubtract, kMultiply, kDivide, kPower };

  /// Parses `text`. ParseError positions are offsets into `text` plus
  /// `position_offset`, so callers embedding an expression in larger input
  /// can report positions in their own coordinates.
  static Expression parse(std::string_view text, std::size_t position_offset = 0);

  static Expression number(const Rational& value);
  static Expression variable();
  static Expression negate(Expression operand);
  static Expression binary(Kind kind, Expression lhs, Expression rhs);
  static Expression power(Expression base, unsigned exponent);

  Kind kind() const;

  /// Exact value at index n. Throws ExpressionDomainError on division by zero.
  Rational evaluate(const Rational& n) const;

  /// Canonical text; parse(to_string()) denotes the same function.
  std::string to_string() const;

  const RationalFunction& as_rational_function() const;

  /// Product of every divisor's numerator. Each index where evaluate() hits a
  /// division by zero is a root of this polynomial.
  const Polynomial& singular_guard() const;

 // Opaque tree node, defined in the implementation file.
  struct Node;

 private:
  explicit Expression(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

}  // namespace wshift
