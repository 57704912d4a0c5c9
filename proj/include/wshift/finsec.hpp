#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wshift/rational.hpp"
#include "wshift/verdict.hpp"
#include "wshift/weight_sequence.hpp"

namespace wshift::finsec {

using RealMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Dense N x N section of an operator in the basis e_1 .. e_N, exact entries.
// Element access is 1-based to match the operator indexing.
class SectionMatrix {
 public:
  explicit SectionMatrix(std::size_t order);

  /// Upper-left N x N block of S: entry (n+1, n) = a_n, and S_N e_N = 0.
  static SectionMatrix shift(const WeightSequence& w, std::size_t order);
  static SectionMatrix diagonal(std::span<const Rational> entries);

  std::size_t order() const { return order_; }
  Rational& operator()(std::size_t row, std::size_t col);
  const Rational& operator()(std::size_t row, std::size_t col) const;

  SectionMatrix adjoint() const;
  /// Entrywise square.
  SectionMatrix squared_entries() const;
  /// Moore-Penrose inverse of a diagonal section: reciprocal on the
  /// support, zero on the kernel. Throws PreconditionViolation if not diagonal.
  SectionMatrix diagonal_pinv() const;
  bool is_diagonal() const;
  std::vector<Rational> diagonal_entries() const;
  RealMatrix to_real() const;

  friend SectionMatrix operator*(const SectionMatrix& a, const SectionMatrix& b);
  friend SectionMatrix operator+(const SectionMatrix& a, const SectionMatrix& b);
  friend SectionMatrix operator-(const SectionMatrix& a, const SectionMatrix& b);
  friend SectionMatrix operator*(const Rational& s, const SectionMatrix& m);
  friend bool operator==(const SectionMatrix&, const SectionMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;  // row-major
};

/// S_N* S_N - S_N S_N*. Interior diagonal entries are the self-commutator
/// diagonal; entry (N, N) is the truncation artifact -a_{N-1}^2.
SectionMatrix q_section(const WeightSequence& w, std::size_t order);

/// Entrywise squares of D^{1/2} S_N D^{+1/2}, computed exactly as
/// D (S_N o S_N) D^+ with D = diag(d_1 .. d_N) taken from the interior of a
/// section of order N + 1. Throws NotHyponormalAt if some d_n < 0.
SectionMatrix transformed_section_squares(const WeightSequence& w, std::size_t order);

/// D^{1/2} S_N D^{+1/2} in extended precision, square roots taken entrywise
/// on the diagonal factors.
RealMatrix transformed_section_real(const WeightSequence& w, std::size_t order);

enum class Mode { kExact, kReal };

struct PsdResult {
  bool psd = false;
  /// Exact mode: first negative pivot, or the negative 2x2 minor found when a
  /// zero pivot has a nonzero row. Real mode: smallest eigenvalue.
  Rational witness;
  long double real_witness = 0.0L;
  /// 1-based elimination step of the failure (exact mode).
  std::optional<std::size_t> failing_step;
};

/// Exact: symmetric elimination without pivoting; tol ignored and any
/// asymmetry throws NonSymmetric. Real: symmetrize, throw NonSymmetric if the
/// largest asymmetry exceeds tol, then require min eigenvalue >= -tol.
PsdResult psd_check(const SectionMatrix& m, Mode mode = Mode::kExact, long double tol = 1e-10L);
PsdResult psd_check(const RealMatrix& m, long double tol);

/// D_N - m S_N* D_N S_N >= 0. `d` supplies D_1 .. D_N.
bool definition1_section_check(const WeightSequence& w, std::span<const Rational> d,
                               const Rational& m, std::size_t order, Mode mode = Mode::kExact,
                               long double tol = 1e-10L);

}  // namespace wshift::finsec
