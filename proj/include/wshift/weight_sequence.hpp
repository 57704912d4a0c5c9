#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "wshift/expression.hpp"
#include "wshift/rational.hpp"

namespace wshift {

/// Prefix-only sequence: weights beyond the prefix are not known.
struct NoTail {
  friend bool operator==(const NoTail&, const NoTail&) { return true; }
};

/// a_n = value for every n past the prefix.
struct ConstantTail {
  Rational value;
  friend bool operator==(const ConstantTail&, const ConstantTail&) = default;
};

/// a_n = expr(n) for every n past the prefix.
struct ExpressionTail {
  Expression expr;
  friend bool operator==(const ExpressionTail& a, const ExpressionTail& b) {
    return a.expr.as_rational_function().same_function(b.expr.as_rational_function());
  }
};

using Tail = std::variant<NoTail, ConstantTail, ExpressionTail>;

// Weights a_1, a_2, ... of the unilateral shift S e_n = a_n e_{n+1}.
// Weights are positive: phases are removed by unitary equivalence and a
// zero weight splits off a normal summand, so both are rejected here rather
// than normalized. Indices are 1-based and a_0 = 0 by convention.
class WeightSequence {
 public:
  static constexpr std::size_t kDefaultHorizon = 10'000;

  /// Throws DomainError for an empty prefix, a nonpositive prefix or
  /// constant weight, an expression tail unbounded in n, or a horizon
  /// shorter than the prefix.
  explicit WeightSequence(std::vector<Rational> prefix, Tail tail = NoTail{},
                          std::size_t horizon = kDefaultHorizon);

  const std::vector<Rational>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }
  std::size_t horizon() const { return horizon_; }

  bool has_tail() const { return !std::holds_alternative<NoTail>(tail_); }

  /// Last index with a defined weight when the tail is absent, otherwise
  /// the horizon.
  std::size_t evaluable_end() const;

  /// a_n for n >= 1; a_0 = 0. Throws IndexBeyondPrefix past a missing tail
  /// and ExpressionDomainError where an expression tail is undefined or <= 0.
  Rational weight(std::size_t n) const;

  /// a_1 .. a_last, in order.
  std::vector<Rational> weights(std::size_t last) const;

  /// Same sequence with a different horizon.
  WeightSequence with_horizon(std::size_t horizon) const;

  friend bool operator==(const WeightSequence& a, const WeightSequence& b) = default;

 private:
  std::vector<Rational> prefix_;
  Tail tail_;
  std::size_t horizon_;
};

}  // namespace wshift
