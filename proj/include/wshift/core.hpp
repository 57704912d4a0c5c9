#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wshift/rational.hpp"
#include "wshift/verdict.hpp"
#include "wshift/weight_sequence.hpp"

namespace wshift {

// ---------------------------------------------------------------------------
// Self-commutator Q_S = S*S - SS* of a weighted shift. It is diagonal with
//   d_1 = a_1^2,  d_n = a_n^2 - a_{n-1}^2,
// so S is hyponormal exactly when every d_n is nonnegative.
// ---------------------------------------------------------------------------

Rational q_diagonal(const WeightSequence& w, std::size_t n);

/// d_1 .. d_last.
std::vector<Rational> q_diagonal_range(const WeightSequence& w, std::size_t last);

// ---------------------------------------------------------------------------
// Q^{1/2} S Q^{+1/2} is again a weighted shift. Its squared weights are
//   b_n^2 = a_n^2 d_{n+1} / d_n                 when d_n > 0,
//   b_n^2 = 0                                   when d_n = 0,
// because the Moore-Penrose inverse vanishes on the kernel. When d_n = 0 but
// d_{n+1} > 0 the kernel vector e_n is carried out of the kernel; such an
// index is flagged as a kernel escape.
// ---------------------------------------------------------------------------

struct RatioEntry {
  Rational value;
  bool kernel_escape = false;
};

/// Throws NotHyponormalAt when d_n or d_{n+1} is negative.
RatioEntry ratio_squared(const WeightSequence& w, std::size_t n);

/// b_1 .. b_last (needs weights up to last + 1).
std::vector<RatioEntry> ratio_sequence(const WeightSequence& w, std::size_t last);

/// b_n itself, for display only.
long double ratio_display(const RatioEntry& entry);

// ---------------------------------------------------------------------------
// Monotonicity and the near-subnormality decision.
// ---------------------------------------------------------------------------

/// Nondecreasing weights. Constant tails are decided exactly; expression
/// tails exactly on [1, horizon + 2] plus a root-bound certificate beyond;
/// a missing tail leaves the answer Unknown once the prefix passes.
Verdict is_hyponormal(const WeightSequence& w);

enum class PlateauKind {
  kStrictlyIncreasing,
  kStrictThenConstant,   // index: plateau index i (a_1 < ... < a_i = a_{i+1} = ...)
  kEqualityThenIncrease, // index: first j with a_j = a_{j+1} < a_{j+2}
  kNotMonotone,          // index: first j with a_j > a_{j+1}
  kUnknownBeyondHorizon,
};

struct PlateauStructure {
  PlateauKind kind = PlateauKind::kUnknownBeyondHorizon;
  std::size_t index = 0;

  friend bool operator==(const PlateauStructure&, const PlateauStructure&) = default;
};

std::string_view to_string(PlateauKind kind);

/// Throws PreconditionViolation when the shift is not hyponormal.
PlateauStructure plateau_structure(const WeightSequence& w);

enum class SupGrade { kProven, kEvidence, kDiverges };

std::string_view to_string(SupGrade grade);

struct SupAnalysis {
  /// Largest b_n^2 seen, raised to the limit of b_n^2 when one is known.
  Rational estimate;
  SupGrade grade = SupGrade::kEvidence;
  /// Index attaining the largest evaluated b_n^2.
  std::size_t argmax = 1;
  /// b_n^2 was evaluated for n in [1, evaluated_to].
  std::size_t evaluated_to = 0;
  /// lim b_n^2 when the tail is a certified rational function.
  std::optional<Rational> limit;
  /// Ratio of the maxima of the last two index decades.
  std::optional<double> last_decade_growth;
};

/// Finiteness of sup b_n^2 for strictly increasing and strict-then-constant
/// weights, or horizon evidence when the evaluated range is strictly
/// increasing but the tail is open. Throws PreconditionViolation otherwise.
SupAnalysis sup_analysis(const WeightSequence& w);

struct TrendResult {
  SupGrade grade = SupGrade::kEvidence;
  std::optional<double> last_decade_growth;
};

// Divergence heuristic on b_1^2, b_2^2, ... grouped into index decades
// [1,9], [10,99], [100,999], ...: Diverges when the last decade maximum
// exceeds kDivergenceFactor times the first decade maximum and the last three
// decade maxima strictly increase.
inline constexpr double kDivergenceFactor = 1e6;
TrendResult classify_trend(std::span<const Rational> ratio_squares);

/// N(Q_S) invariant under S: the zero set of d is upward closed. Throws
/// PreconditionViolation when the shift is not hyponormal.
Verdict kernel_invariance(const WeightSequence& w);

struct NearSubnormalResult {
  Verdict verdict;
  Verdict hyponormal;
  std::optional<PlateauStructure> plateau;
  std::optional<Verdict> kernel;
  std::optional<SupAnalysis> sup;
};

/// Never throws; evaluation failures become Unknown with the message in
/// verdict.note.
NearSubnormalResult classify_near_subnormal(const WeightSequence& w);

// ---------------------------------------------------------------------------
// D-near subnormality for diagonal D: D >= m S*DS reduces entrywise to
// D_n >= m a_n^2 D_{n+1}.
// ---------------------------------------------------------------------------

struct AdmissibleM {
  /// inf D_n / (a_n^2 D_{n+1}) over indices with D_{n+1} > 0; nullopt means
  /// no index constrains m.
  std::optional<Rational> sup;
  bool holds = false;
  /// First index with D_n = 0 < a_n^2 D_{n+1}.
  std::optional<std::size_t> blocking_index;
};

/// `d` holds D_1, D_2, ... and must cover index last + 1. Throws NegativeD
/// for a negative entry and PreconditionViolation when `last` exceeds the
/// evaluable range or `d` is too short.
AdmissibleM d_near_subnormal_scalar(const WeightSequence& w, std::span<const Rational> d,
                                    std::size_t last);

}  // namespace wshift
