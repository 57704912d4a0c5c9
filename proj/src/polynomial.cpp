#include "wshift/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace wshift {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Polynomial Polynomial::shifted() const {
  // Horner in polynomial arithmetic: p(n + 1) = (...(c_d (n+1) + c_{d-1})(n+1) ...)
  const Polynomial n_plus_one({Rational(1), Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n_plus_one + constant(*it);
  }
  return acc;
}

Rational Polynomial::cauchy_bound() const {
  if (degree() <= 0) return 0;
  Rational worst = 0;
  for (int i = 0; i < degree(); ++i) {
    Rational ratio = abs(coeffs_[static_cast<std::size_t>(i)] / leading());
    if (ratio > worst) worst = ratio;
  }
  return worst + 1;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return {Polynomial::constant(c), Polynomial::constant(1)};
}

RationalFunction RationalFunction::identity() {
  return {Polynomial::identity(), Polynomial::constant(1)};
}

RationalFunction RationalFunction::shifted() const {
  return {numerator.shifted(), denominator.shifted()};
}

bool RationalFunction::same_function(const RationalFunction& other) const {
  return numerator * other.denominator == other.numerator * denominator;
}

bool RationalFunction::bounded_at_infinity() const {
  return numerator.degree() <= denominator.degree();
}

Rational RationalFunction::limit_at_infinity() const {
  if (numerator.is_zero() || numerator.degree() < denominator.degree()) return 0;
  return numerator.leading() / denominator.leading();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator == b.denominator) return {a.numerator + b.numerator, a.denominator};
  return {a.numerator * b.denominator + b.numerator * a.denominator,
          a.denominator * b.denominator};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.numerator, a.denominator}; }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator * b.numerator, a.denominator * b.denominator};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  // A zero divisor keeps a zero denominator: undefined everywhere.
  return {a.numerator * b.denominator, a.denominator * b.numerator};
}

TailCertificate certify_tail(const RationalFunction& f, const Rational& start,
                             const Polynomial& guard) {
  TailCertificate cert;
  const Polynomial& num = f.numerator;
  const Polynomial& den = f.denominator;
  if (den.is_zero() || guard.is_zero() || guard.cauchy_bound() > start) return cert;

  // Past every root of num and den the sign of f is the sign of the ratio
  // of leading coefficients.
  const bool den_clear = den.cauchy_bound() <= start;
  const bool num_clear = !num.is_zero() && num.cauchy_bound() <= start;
  cert.positive = den_clear && num_clear && sign(num.leading()) * sign(den.leading()) > 0;

  // f(n+1) - f(n) = delta(n) / (den(n) den(n+1)); the denominator product is
  // positive once n clears the roots of den.
  const Polynomial delta = num.shifted() * den - num * den.shifted();
  if (delta.is_zero()) {
    cert.trend = TailTrend::kConstant;
  } else if (den_clear && delta.cauchy_bound() <= start) {
    cert.trend = sign(delta.leading()) > 0 ? TailTrend::kStrictlyIncreasing
                                           : TailTrend::kStrictlyDecreasing;
  }
  return cert;
}

}  // namespace wshift
