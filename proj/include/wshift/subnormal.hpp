#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wshift/finsec.hpp"
#include "wshift/rational.hpp"
#include "wshift/verdict.hpp"
#include "wshift/weight_sequence.hpp"

namespace wshift {

/// beta_0 = 1, beta_n = beta_{n-1} a_n^2. A weighted shift is subnormal
/// exactly when (beta_n) is a Stieltjes moment sequence.
struct MomentSequence {
  std::vector<Rational> beta;  // beta[n] = beta_n

  std::size_t last_index() const { return beta.size() - 1; }
};

/// beta_0 .. beta_{up_to}. Throws PreconditionViolation past the evaluable
/// range of `w`.
MomentSequence moments(const WeightSequence& w, std::size_t up_to);

/// A(k) = (beta_{i+j}) and B(k) = (beta_{i+j+1}), 0 <= i, j <= k.
struct HankelPair {
  std::size_t order;
  finsec::SectionMatrix a;
  finsec::SectionMatrix b;
};

/// Needs beta up to 2k + 1.
HankelPair hankel_pair(const MomentSequence& m, std::size_t order);

inline constexpr std::size_t kDefaultMaxOrder = 8;

struct HankelResult {
  bool refuted = false;
  /// Proven for an exact-mode refutation; Evidence for a pass, or for a
  /// real-mode refutation.
  Grade grade = Grade::kEvidence;
  /// Highest order actually examined; capped by the evaluable moments.
  std::size_t tested_order = 0;
  std::optional<std::size_t> failing_order;
  char failing_matrix = ' ';  // 'A' or 'B'
  Rational witness;
  long double real_witness = 0.0L;
};

/// Finite Stieltjes positivity conditions, orders 1 .. max_order, lowest
/// failing order first (A before B). Passing is necessary only.
HankelResult hankel_necessary_check(const WeightSequence& w,
                                    std::size_t max_order = kDefaultMaxOrder,
                                    finsec::Mode mode = finsec::Mode::kExact,
                                    long double tol = 1e-10L);

struct SubnormalResult {
  Verdict verdict;
  /// Plateau index when the structural branch decided.
  std::optional<std::size_t> plateau_index;
  std::optional<HankelResult> hankel;
  std::string basis;
};

/// Structural branch for strict-then-constant weights (plateau index 1 or 2
/// is subnormal, 3 or more is not), class inclusion for shifts that are not
/// near subnormal, and the Hankel oracle otherwise. Subnormal Yes with grade
/// Proven comes from the structural branch only.
SubnormalResult classify_subnormal(const WeightSequence& w,
                                   std::size_t max_order = kDefaultMaxOrder,
                                   finsec::Mode mode = finsec::Mode::kExact,
                                   long double tol = 1e-10L);

}  // namespace wshift
