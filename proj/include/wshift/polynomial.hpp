#pragma once

#include <cstddef>
#include <vector>

#include "wshift/rational.hpp"

namespace wshift {

// Dense univariate polynomial in the sequence index n, coefficients stored
// lowest degree first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial identity();  // p(n) = n

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& n) const;

  /// p(n + 1).
  Polynomial shifted() const;

  /// Every real root r satisfies |r| < cauchy_bound() (Cauchy's bound).
  /// Nonzero constants have no roots and report 0.
  Rational cauchy_bound() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient of polynomials, kept unreduced so the denominator still vanishes
// wherever the originating expression divides by zero.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator = Polynomial::constant(1);

  static RationalFunction constant(const Rational& c);
  static RationalFunction identity();

  RationalFunction shifted() const;
  /// Same function of n (cross-multiplied comparison).
  bool same_function(const RationalFunction& other) const;
  /// True when deg numerator <= deg denominator, i.e. bounded as n grows.
  bool bounded_at_infinity() const;
  /// Limit as n -> infinity; requires bounded_at_infinity().
  Rational limit_at_infinity() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
};

// Behaviour of an index sequence f(n) for all integers n >= start, decided
// from root bounds of the relevant polynomials.
enum class TailTrend { kConstant, kStrictlyIncreasing, kStrictlyDecreasing, kUndecided };

struct TailCertificate {
  TailTrend trend = TailTrend::kUndecided;
  /// f(n) defined and > 0 for every n >= start.
  bool positive = false;
};

/// `guard` vanishes wherever the originating expression is undefined; the
/// certificate also requires it to be root-free from `start` on.
TailCertificate certify_tail(const RationalFunction& f, const Rational& start,
                             const Polynomial& guard = Polynomial::constant(1));

}  // namespace wshift
