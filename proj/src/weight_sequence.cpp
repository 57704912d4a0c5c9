#include "wshift/weight_sequence.hpp"

#include <string>
#include <utility>

#include "wshift/error.hpp"

namespace wshift {

WeightSequence::WeightSequence(std::vector<Rational> prefix, Tail tail, std::size_t horizon)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), horizon_(horizon) {
  if (prefix_.empty()) throw ShiftError(ErrorKind::kDomain, "weight prefix must not be empty");
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] <= 0) {
      throw ShiftError(ErrorKind::kDomain,
                       "weight a_" + std::to_string(i + 1) + " = " + prefix_[i].get_str() +
                           " is not positive",
                       i + 1);
    }
  }
  if (const auto* c = std::get_if<ConstantTail>(&tail_); c && c->value <= 0) {
    throw ShiftError(ErrorKind::kDomain,
                     "constant tail " + c->value.get_str() + " is not positive");
  }
  if (const auto* e = std::get_if<ExpressionTail>(&tail_)) {
    if (!e->expr.as_rational_function().bounded_at_infinity()) {
      throw ShiftError(ErrorKind::kDomain,
                       "tail expression " + e->expr.to_string() +
                           " is unbounded in n; the shift would not be a bounded operator");
    }
  }
  if (horizon_ < prefix_.size()) {
    throw ShiftError(ErrorKind::kDomain, "horizon " + std::to_string(horizon_) +
                                             " is shorter than the prefix length " +
                                             std::to_string(prefix_.size()));
  }
}

std::size_t WeightSequence::evaluable_end() const {
  return has_tail() ? horizon_ : prefix_.size();
}

Rational WeightSequence::weight(std::size_t n) const {
  if (n == 0) return 0;
  if (n <= prefix_.size()) return prefix_[n - 1];
  return std::visit(
      [&](const auto& tail) -> Rational {
        using T = std::decay_t<decltype(tail)>;
        if constexpr (std::is_same_v<T, NoTail>) {
          throw ShiftError(ErrorKind::kIndexBeyondPrefix,
                           "index " + std::to_string(n) + " lies beyond the prefix of length " +
                               std::to_string(prefix_.size()) + " and no tail is given",
                           n);
        } else if constexpr (std::is_same_v<T, ConstantTail>) {
          return tail.value;
        } else {
          Rational value = tail.expr.evaluate(Rational(static_cast<unsigned long>(n)));
          if (value <= 0) {
            throw ShiftError(ErrorKind::kExpressionDomain,
                             "tail expression gives nonpositive weight " + value.get_str() +
                                 " at n = " + std::to_string(n),
                             n);
          }
          return value;
        }
      },
      tail_);
}

std::vector<Rational> WeightSequence::weights(std::size_t last) const {
  std::vector<Rational> out;
  out.reserve(last);
  for (std::size_t n = 1; n <= last; ++n) out.push_back(weight(n));
  return out;
}

WeightSequence WeightSequence::with_horizon(std::size_t horizon) const {
  return WeightSequence(prefix_, tail_, horizon);
}

}  // namespace wshift
