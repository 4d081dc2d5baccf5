#pragma once

// Exact phase-one simplex for systems A x >= b with x free.

#include "bordersub/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bordersub {

/// Returns a point with A x >= b, or nullopt when the system is infeasible.
/// Dense tableau, Bland's rule (no cycling), artificial columns dropped as
/// soon as they leave the basis. Every operation is exact in Scalar.
template <typename Scalar>
std::optional<Vector<Scalar>> find_feasible_point(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  const Index m = a.rows();
  const Index d = a.cols();
  if (b.size() != m) throw std::invalid_argument("right-hand side length does not match constraints");
  if (m == 0) return Vector<Scalar>::Zero(d);

  // Columns: x+ (d), x- (d), surplus (m); last column holds the right-hand side.
  const Index cols = 2 * d + m;
  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, cols + 1);
  std::vector<Index> basis(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    const Scalar sign = b[i] < 0 ? Scalar(-1) : Scalar(1);
    for (Index j = 0; j < d; ++j) {
      if (a(i, j) == 0) continue;
      t(i, j) = sign * a(i, j);
      t(i, d + j) = -sign * a(i, j);
    }
    t(i, 2 * d + i) = -sign;
    t(i, cols) = sign * b[i];
    basis[static_cast<std::size_t>(i)] = cols + i;  // artificial
  }
  // Phase-one objective: minimise the sum of artificials, expressed in the
  // non-basic columns.
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j <= cols; ++j) {
      if (t(i, j) != 0) t(m, j) -= t(i, j);
    }
  }

  for (;;) {
    Index entering = -1;
    for (Index j = 0; j < cols; ++j) {
      if (t(m, j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    Index leaving = -1;
    Scalar best_ratio;
    for (Index i = 0; i < m; ++i) {
      if (t(i, entering) <= 0) continue;
      Scalar ratio = t(i, cols) / t(i, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving < 0) throw std::logic_error("phase-one simplex is bounded below; unbounded ray is impossible");

    const Scalar inv = Scalar(1) / t(leaving, entering);
    for (Index j = 0; j <= cols; ++j) {
      if (t(leaving, j) != 0) t(leaving, j) *= inv;
    }
    for (Index i = 0; i <= m; ++i) {
      if (i == leaving || t(i, entering) == 0) continue;
      const Scalar factor = t(i, entering);
      for (Index j = 0; j <= cols; ++j) {
        if (t(leaving, j) != 0) t(i, j) -= factor * t(leaving, j);
      }
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  if (t(m, cols) != 0) return std::nullopt;

  Vector<Scalar> x = Vector<Scalar>::Zero(d);
  for (Index i = 0; i < m; ++i) {
    const Index var = basis[static_cast<std::size_t>(i)];
    if (var < d) {
      x[var] += t(i, cols);
    } else if (var < 2 * d) {
      x[var - d] -= t(i, cols);
    }
  }
  return x;
}

}  // namespace bordersub
