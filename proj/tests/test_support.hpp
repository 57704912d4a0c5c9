#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "wshift/rational.hpp"
#include "wshift/weight_sequence.hpp"

namespace wshift::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

// Small positive rationals: numerators 1..max_num, denominators 1..max_den.
inline Rational random_positive(std::mt19937_64& rng, long max_num = 40, long max_den = 12) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

// Nondecreasing prefix of length 1..max_len; duplicates appear with
// probability about `tie_rate` so plateaus and equalities are exercised.
inline std::vector<Rational> random_nondecreasing(std::mt19937_64& rng, std::size_t max_len = 8,
                                                  double tie_rate = 0.2) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::bernoulli_distribution tie(tie_rate);
  std::vector<Rational> out(len(rng));
  for (auto& v : out) v = random_positive(rng);
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (tie(rng)) out[i] = out[i - 1];
  }
  return out;
}

// Hyponormal shift: nondecreasing prefix followed by a constant tail that is
// either equal to the last weight or larger.
inline WeightSequence random_hyponormal_constant_tail(std::mt19937_64& rng,
                                                      std::size_t max_len = 8) {
  std::vector<Rational> prefix = random_nondecreasing(rng, max_len);
  std::bernoulli_distribution equal(0.3);
  Rational tail = prefix.back();
  if (!equal(rng)) tail += random_positive(rng, 10, 6);
  return WeightSequence(std::move(prefix), ConstantTail{tail});
}

// a_1 < a_2 < ... < a_len, all positive.
inline std::vector<Rational> random_strict(std::mt19937_64& rng, std::size_t len) {
  std::vector<Rational> out;
  Rational current = random_positive(rng, 10, 8);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(current);
    current += random_positive(rng, 10, 8);
  }
  return out;
}

}  // namespace wshift::testing
