#pragma once

#include <string>
#include <string_view>

#include "wshift/weight_sequence.hpp"

namespace wshift {

// Text form of a weight sequence:
//
//   spec     := "prefix" "=" "[" rational ("," rational)* "]"
//               (";" "tail" "=" tail)? (";" "horizon" "=" integer)?
//   tail     := "const" "(" rational ")" | "expr" "(" arith ")"
//   rational := integer | integer "/" positive-integer | decimal
//
// Decimals are read exactly (0.75 is 3/4). `arith` is the Expression
// grammar. Whitespace is free between tokens.
//
//   "prefix=[1,2]; tail=const(3)"
//   "prefix=[1/2,1/2]; tail=expr(1 - 1/(n+1))"
//   "prefix=[1]"

/// ParseError (index = character offset) on malformed text, DomainError on
/// nonpositive weights or other construction failures.
WeightSequence parse_spec(std::string_view text);

/// Canonical text; parse_spec(print_spec(w)) == w. The horizon clause is
/// omitted when it is the default.
std::string print_spec(const WeightSequence& w);

}  // namespace wshift
