#pragma once

// Exact dense linear algebra over Eigen matrices with an exact scalar.
// Everything here is templated on the scalar; Rational (field) and BigInt
// (Euclidean ring, for the fraction-free routines) are the instantiations
// used by the library.

#include "bordersub/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bordersub {

template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> rows;          // nonzero rows of the reduced row echelon form
  std::vector<Index> pivots;    // pivot column of each row, increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination over a field. The result is canonical: two
/// matrices with the same row space give identical EchelonForm.
template <typename Derived>
EchelonForm<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) {
      if (m(row, j) != 0) m(row, j) *= inv;
    }
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.topRows(row), std::move(pivots)};
}

/// Columns form a basis of {v : m v = 0}, one column per free variable with
/// that variable set to 1.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto form = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : form.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - form.rank());
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = 1;
    for (Index r = 0; r < form.rank(); ++r) {
      basis(form.pivots[static_cast<std::size_t>(r)], out) = -form.rows(r, free);
    }
    ++out;
  }
  return basis;
}

/// Fraction-free (Bareiss) elimination; every division is exact, so integer
/// inputs never leave the integers.
template <typename Scalar>
Index bareiss_rank(Matrix<Scalar> m) {
  Scalar previous(1);
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    for (Index i = row + 1; i < m.rows(); ++i) {
      for (Index j = col + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(row, col) - m(i, col) * m(row, j)) / previous;
      }
      m(i, col) = 0;
    }
    previous = m(row, col);
    ++row;
  }
  return row;
}

/// Scales every row by the lcm of its denominators.
inline MatrixZ integer_rows(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt scale(1);
    for (Index j = 0; j < m.cols(); ++j) scale = lcm(scale, BigInt(denominator(m(i, j))));
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = BigInt(numerator(m(i, j))) * (scale / BigInt(denominator(m(i, j))));
    }
  }
  return out;
}

/// Exact rank of a rational matrix via Bareiss on the integer-scaled rows.
inline Index rank(const MatrixQ& m) { return bareiss_rank(integer_rows(m)); }

template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Index n = m.rows();
  Matrix<Scalar> augmented(n, 2 * n);
  augmented << m, Matrix<Scalar>::Identity(n, n);
  const auto form = rref(augmented);
  if (form.rank() < n || form.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<Scalar>(form.rows.rightCols(n));
}

/// Row space kept in reduced row echelon form while rows stream in. Used where
/// the stacked system would be much taller than its rank.
template <typename Scalar>
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(Index ambient) : ambient_(ambient) {}

  Index ambient() const { return ambient_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Reduces v in place against the current basis.
  void reduce(Vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Index p = pivots_[r];
      if (v[p] == 0) continue;
      const Scalar factor = v[p];
      const auto& basis_row = rows_[r];
      for (Index j = p; j < ambient_; ++j) {
        if (basis_row[j] != 0) v[j] -= factor * basis_row[j];
      }
    }
  }

  /// Returns true when v was independent of the rows seen so far.
  bool add(Vector<Scalar> v) {
    if (v.size() != ambient_) throw std::invalid_argument("row length does not match ambient");
    reduce(v);
    Index p = 0;
    while (p < ambient_ && v[p] == 0) ++p;
    if (p == ambient_) return false;
    const Scalar inv = Scalar(1) / v[p];
    for (Index j = p; j < ambient_; ++j) {
      if (v[j] != 0) v[j] *= inv;
    }
    for (auto& row : rows_) {
      if (row[p] == 0) continue;
      const Scalar factor = row[p];
      for (Index j = p; j < ambient_; ++j) {
        if (v[j] != 0) row[j] -= factor * v[j];
      }
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  EchelonForm<Scalar> form() const {
    Matrix<Scalar> m(rank(), ambient_);
    for (Index r = 0; r < rank(); ++r) m.row(r) = rows_[static_cast<std::size_t>(r)].transpose();
    return {std::move(m), pivots_};
  }

 private:
  Index ambient_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Index> pivots_;
};

/// A subspace of Scalar^ambient with its canonical (RREF) basis.
template <typename Scalar>
class LinearSubspace {
 public:
  explicit LinearSubspace(Index ambient) : echelon_(ambient) {}

  template <typename Range>
  static LinearSubspace spanned_by(Index ambient, const Range& vectors) {
    LinearSubspace s(ambient);
    for (const auto& v : vectors) s.echelon_.add(v);
    return s;
  }

  void include(const Vector<Scalar>& v) { echelon_.add(v); }

  Index ambient() const { return echelon_.ambient(); }
  Index dim() const { return echelon_.rank(); }
  Matrix<Scalar> basis() const { return echelon_.form().rows; }

  /// Component of v left after reducing against the canonical basis; zero
  /// exactly when v lies in the subspace.
  Vector<Scalar> residue(Vector<Scalar> v) const {
    echelon_.reduce(v);
    return v;
  }

  bool contains(const Vector<Scalar>& v) const {
    const auto r = residue(v);
    for (Index i = 0; i < r.size(); ++i) {
      if (r[i] != 0) return false;
    }
    return true;
  }

 private:
  EchelonAccumulator<Scalar> echelon_;
};

}  // namespace bordersub
