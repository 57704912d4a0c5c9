#pragma once

#include <vector>

#include "wshift/rational.hpp"
#include "wshift/weight_sequence.hpp"

namespace wshift::detail {

enum class Beyond { kConstant, kStrictlyIncreasing, kStrictlyDecreasing, kUnknown };

// Exact weights over the decidable range plus what is known past it.
// Constant tails: prefix followed by two copies of the constant.
// Expression tails: a_1 .. a_{horizon+2}, with a root-bound certificate
// for every later index.
// No tail: the prefix alone.
struct Scan {
  std::vector<Rational> a;  // a[k] = a_{k+1}
  Beyond beyond = Beyond::kUnknown;
  bool has_tail = false;

  std::size_t size() const { return a.size(); }
  const Rational& at(std::size_t n) const { return a[n - 1]; }
};

Scan scan(const WeightSequence& w);

}  // namespace wshift::detail
