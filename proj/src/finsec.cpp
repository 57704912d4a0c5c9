#include "wshift/finsec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "wshift/error.hpp"

namespace wshift::finsec {

SectionMatrix::SectionMatrix(std::size_t order)
    : order_(order), entries_(order * order, Rational(0)) {}

SectionMatrix SectionMatrix::shift(const WeightSequence& w, std::size_t order) {
  SectionMatrix s(order);
  for (std::size_t n = 1; n < order; ++n) s(n + 1, n) = w.weight(n);
  return s;
}

SectionMatrix SectionMatrix::diagonal(std::span<const Rational> entries) {
  SectionMatrix m(entries.size());
  for (std::size_t n = 1; n <= entries.size(); ++n) m(n, n) = entries[n - 1];
  return m;
}

Rational& SectionMatrix::operator()(std::size_t row, std::size_t col) {
  return entries_[(row - 1) * order_ + (col - 1)];
}

const Rational& SectionMatrix::operator()(std::size_t row, std::size_t col) const {
  return entries_[(row - 1) * order_ + (col - 1)];
}

SectionMatrix SectionMatrix::adjoint() const {
  // Real entries: the adjoint is the transpose.
  SectionMatrix t(order_);
  for (std::size_t i = 1; i <= order_; ++i) {
    for (std::size_t j = 1; j <= order_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

SectionMatrix SectionMatrix::squared_entries() const {
  SectionMatrix out(order_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * entries_[k];
  return out;
}

bool SectionMatrix::is_diagonal() const {
  for (std::size_t i = 1; i <= order_; ++i) {
    for (std::size_t j = 1; j <= order_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

SectionMatrix SectionMatrix::diagonal_pinv() const {
  if (!is_diagonal()) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "diagonal_pinv called on a non-diagonal section");
  }
  SectionMatrix out(order_);
  for (std::size_t n = 1; n <= order_; ++n) {
    if ((*this)(n, n) != 0) out(n, n) = 1 / (*this)(n, n);
  }
  return out;
}

std::vector<Rational> SectionMatrix::diagonal_entries() const {
  std::vector<Rational> out;
  out.reserve(order_);
  for (std::size_t n = 1; n <= order_; ++n) out.push_back((*this)(n, n));
  return out;
}

RealMatrix SectionMatrix::to_real() const {
  RealMatrix out(order_, order_);
  for (std::size_t i = 1; i <= order_; ++i) {
    for (std::size_t j = 1; j <= order_; ++j) {
      out(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) =
          to_long_double((*this)(i, j));
    }
  }
  return out;
}

SectionMatrix operator*(const SectionMatrix& a, const SectionMatrix& b) {
  const std::size_t n = a.order_;
  SectionMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational& lhs = a(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        if (b(k, j) != 0) out(i, j) += lhs * b(k, j);
      }
    }
  }
  return out;
}

SectionMatrix operator+(const SectionMatrix& a, const SectionMatrix& b) {
  SectionMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

SectionMatrix operator-(const SectionMatrix& a, const SectionMatrix& b) {
  SectionMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

SectionMatrix operator*(const Rational& s, const SectionMatrix& m) {
  SectionMatrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

SectionMatrix q_section(const WeightSequence& w, std::size_t order) {
  const SectionMatrix s = SectionMatrix::shift(w, order);
  const SectionMatrix s_star = s.adjoint();
  return s_star * s - s * s_star;
}

namespace {

std::vector<Rational> interior_diagonal(const WeightSequence& w, std::size_t order) {
  std::vector<Rational> d = q_section(w, order + 1).diagonal_entries();
  d.pop_back();  // truncation edge
  for (std::size_t n = 1; n <= d.size(); ++n) {
    if (d[n - 1] < 0) {
      throw ShiftError(ErrorKind::kNotHyponormalAt,
                       "section diagonal entry " + std::to_string(n) + " is negative", n);
    }
  }
  return d;
}

}  // namespace

SectionMatrix transformed_section_squares(const WeightSequence& w, std::size_t order) {
  const SectionMatrix d = SectionMatrix::diagonal(interior_diagonal(w, order));
  const SectionMatrix s_sq = SectionMatrix::shift(w, order).squared_entries();
  // For diagonal X, Y: (X S Y)_{ij}^2 = X_ii^2 S_ij^2 Y_jj^2, and the squares
  // of D^{1/2} and D^{+1/2} are D and D^+.
  return d * s_sq * d.diagonal_pinv();
}

RealMatrix transformed_section_real(const WeightSequence& w, std::size_t order) {
  const std::vector<Rational> d = interior_diagonal(w, order);
  const auto n = static_cast<Eigen::Index>(order);
  RealMatrix root = RealMatrix::Zero(n, n);
  RealMatrix root_pinv = RealMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const long double value = to_long_double(d[static_cast<std::size_t>(k)]);
    root(k, k) = std::sqrt(value);
    if (value > 0) root_pinv(k, k) = 1.0L / std::sqrt(value);
  }
  return root * SectionMatrix::shift(w, order).to_real() * root_pinv;
}

PsdResult psd_check(const SectionMatrix& m, Mode mode, long double tol) {
  if (mode == Mode::kReal) return psd_check(m.to_real(), tol);

  const std::size_t n = m.order();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (m(i, j) != m(j, i)) {
        throw ShiftError(ErrorKind::kNonSymmetric,
                         "matrix is not symmetric at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
      }
    }
  }

  // A symmetric matrix is PSD iff elimination in natural order meets only
  // nonnegative pivots, with every zero pivot sitting on a zero row.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i + 1, j + 1);
  }
  PsdResult out;
  out.psd = true;
  bool first_pivot = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = a[k][k];
    if (pivot < 0) {
      out = {false, pivot, to_long_double(pivot), k + 1};
      return out;
    }
    if (first_pivot || pivot < out.witness) out.witness = pivot;
    first_pivot = false;
    if (pivot == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j] != 0) {
          const Rational minor = pivot * a[j][j] - a[k][j] * a[k][j];
          out = {false, minor, to_long_double(minor), k + 1};
          return out;
        }
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational factor = a[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  out.real_witness = to_long_double(out.witness);
  return out;
}

PsdResult psd_check(const RealMatrix& m, long double tol) {
  const long double asymmetry = m.rows() == 0 ? 0.0L : (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > tol) {
    throw ShiftError(ErrorKind::kNonSymmetric, "matrix asymmetry exceeds tolerance");
  }
  PsdResult out;
  if (m.rows() == 0) {
    out.psd = true;
    return out;
  }
  const RealMatrix sym = (m + m.transpose()) / 2.0L;
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const long double smallest = solver.eigenvalues().minCoeff();
  out.real_witness = smallest;
  out.witness = Rational(static_cast<double>(smallest));
  out.psd = smallest >= -tol;
  return out;
}

bool definition1_section_check(const WeightSequence& w, std::span<const Rational> d,
                               const Rational& m, std::size_t order, Mode mode,
                               long double tol) {
  if (order < 2) {
    throw ShiftError(ErrorKind::kPreconditionViolation, "section order must be at least 2");
  }
  if (d.size() < order) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "diagonal must provide D_1 .. D_" + std::to_string(order));
  }
  const SectionMatrix dn = SectionMatrix::diagonal(d.first(order));
  const SectionMatrix s = SectionMatrix::shift(w, order);
  return psd_check(dn - m * (s.adjoint() * dn * s), mode, tol).psd;
}

}  // namespace wshift::finsec
