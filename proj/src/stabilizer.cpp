#include "bordersub/stabilizer.hpp"

#include <algorithm>

namespace bordersub {
namespace {

Index lie_dim(int n) { return 3 * static_cast<Index>(n) * n; }

Index column_of(int n, int factor, int row, int col) {
  return static_cast<Index>(factor) * n * n + static_cast<Index>(row) * n + col;
}

MatrixQ& factor_matrix(LieTriple& lt, int factor) {
  return factor == 0 ? lt.x : (factor == 1 ? lt.y : lt.z);
}

// <M, W>: the unit tensor together with every basis tensor of W.
LinearSubspace<Rational> unit_plus_w(int n) {
  LinearSubspace<Rational> span(static_cast<Index>(n) * n * n);
  span.include(unit_tensor(n).flatten());
  for (const auto& t : build_w(n)) {
    VectorQ e = VectorQ::Zero(span.ambient());
    e[flat_index(n, t)] = 1;
    span.include(e);
  }
  return span;
}

Tensor3 basis_tensor(int n, const Triple& t) {
  Tensor3 e(n);
  e.set(t, 1);
  return e;
}

// Row space of the linear conditions act(lt, v) in <M, W> for v = M and every
// basis tensor of W.
EchelonAccumulator<Rational> cone_conditions(int n) {
  const auto span = unit_plus_w(n);
  EchelonAccumulator<Rational> conditions(lie_dim(n));
  std::vector<Tensor3> generators{unit_tensor(n)};
  for (const auto& t : build_w(n)) generators.push_back(basis_tensor(n, t));
  for (const auto& v : generators) {
    const MatrixQ a = action_matrix(v);
    MatrixQ residues(a.rows(), a.cols());
    for (Index b = 0; b < a.cols(); ++b) residues.col(b) = span.residue(a.col(b));
    for (Index r = 0; r < residues.rows(); ++r) {
      bool nonzero = false;
      for (Index c = 0; c < residues.cols() && !nonzero; ++c) nonzero = residues(r, c) != 0;
      if (nonzero) conditions.add(residues.row(r).transpose());
    }
  }
  return conditions;
}

}  // namespace

LieTriple LieTriple::zero(int n) {
  return {MatrixQ::Zero(n, n), MatrixQ::Zero(n, n), MatrixQ::Zero(n, n)};
}

LieTriple LieTriple::unit(int n, int factor, int row, int col) {
  LieTriple lt = zero(n);
  factor_matrix(lt, factor)(row, col) = 1;
  return lt;
}

LieTriple LieTriple::from_coordinates(int n, const VectorQ& coords) {
  if (coords.size() != lie_dim(n)) throw DimensionMismatch("expected 3n^2 coordinates");
  LieTriple lt = zero(n);
  for (int f = 0; f < 3; ++f)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) factor_matrix(lt, f)(r, c) = coords[column_of(n, f, r, c)];
  return lt;
}

LieTriple& LieTriple::operator+=(const LieTriple& other) {
  if (other.n() != n()) throw DimensionMismatch("adding Lie triples of different n");
  x += other.x;
  y += other.y;
  z += other.z;
  return *this;
}

std::string to_string(Convention c) { return c == Convention::Gl3 ? "gl3" : "quotient"; }

Tensor3 act(const LieTriple& lt, const Tensor3& t) {
  const int n = t.n();
  if (lt.n() != n) throw DimensionMismatch("Lie triple and tensor differ in n");
  Tensor3 out(n);
  for (const auto& [e, v] : t.entries()) {
    for (int s = 1; s <= n; ++s) {
      if (lt.x(s - 1, e.i - 1) != 0) out.add({s, e.j, e.k}, lt.x(s - 1, e.i - 1) * v);
      if (lt.y(s - 1, e.j - 1) != 0) out.add({e.i, s, e.k}, lt.y(s - 1, e.j - 1) * v);
      if (lt.z(s - 1, e.k - 1) != 0) out.add({e.i, e.j, s}, lt.z(s - 1, e.k - 1) * v);
    }
  }
  return out;
}

MatrixQ action_matrix(const Tensor3& t) {
  const int n = t.n();
  MatrixQ a = MatrixQ::Zero(static_cast<Index>(n) * n * n, lie_dim(n));
  for (const auto& [e, v] : t.entries()) {
    for (int s = 1; s <= n; ++s) {
      a(flat_index(n, {s, e.j, e.k}), column_of(n, 0, s - 1, e.i - 1)) += v;
      a(flat_index(n, {e.i, s, e.k}), column_of(n, 1, s - 1, e.j - 1)) += v;
      a(flat_index(n, {e.i, e.j, s}), column_of(n, 2, s - 1, e.k - 1)) += v;
    }
  }
  return a;
}

std::int64_t stabilizer_dim(const Tensor3& t) {
  return static_cast<std::int64_t>(lie_dim(t.n()) - rank(action_matrix(t)));
}

MatrixQ stabilizer_basis(const Tensor3& t) { return kernel_basis(action_matrix(t)); }

std::int64_t orbit_dim_unit(int n) { return static_cast<std::int64_t>(rank(action_matrix(unit_tensor(n)))); }

std::int64_t cone_stabilizer_dim(int n, Convention convention) {
  const auto dim = static_cast<std::int64_t>(lie_dim(n) - cone_conditions(n).rank());
  return convention == Convention::Gl3 ? dim : dim - 2;
}

ConeStabilizerStructure cone_stabilizer_structure(int n) {
  ConeStabilizerStructure report;
  const auto conditions = cone_conditions(n);
  report.basis = kernel_basis(conditions.form().rows);
  report.dim_gl3 = report.basis.cols();
  report.expected_shape_dim = 3 * static_cast<std::int64_t>(n) * (n + 1) / 2 - (n - 1);
  for (Index b = 0; b < report.basis.cols(); ++b) {
    const auto lt = LieTriple::from_coordinates(n, report.basis.col(b));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const bool x_bad = r < c && lt.x(r, c) != 0;
        const bool yz_bad = r > c && (lt.y(r, c) != 0 || lt.z(r, c) != 0);
        if (x_bad || yz_bad) {
          report.triangular = false;
          report.violations.push_back("basis " + std::to_string(b) + ": nonzero " + (x_bad ? "x" : "y/z") +
                                      " entry at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
        }
      }
    }
    const Rational first = lt.x(0, 0) + lt.y(0, 0) + lt.z(0, 0);
    for (int s = 1; s < n; ++s) {
      if (lt.x(s, s) + lt.y(s, s) + lt.z(s, s) != first) {
        report.equal_diagonal_sums = false;
        report.violations.push_back("basis " + std::to_string(b) + ": diagonal sum at " + std::to_string(s + 1) +
                                    " differs from the first");
      }
    }
  }
  if (report.dim_gl3 != report.expected_shape_dim) {
    report.violations.push_back("kernel dimension " + std::to_string(report.dim_gl3) + " != " +
                                std::to_string(report.expected_shape_dim));
  }
  return report;
}

std::int64_t orbit_cone_tangent_dim_at(const Tensor3& w) {
  const int n = w.n();
  const Tensor3 point = unit_tensor(n) + w;
  const MatrixQ tangent = action_matrix(point);
  const auto cone = build_w(n);
  const Index ambient = static_cast<Index>(n) * n * n;
  MatrixQ rows(tangent.cols() + 1 + static_cast<Index>(cone.size()), ambient);
  rows.topRows(tangent.cols()) = tangent.transpose();
  rows.row(tangent.cols()) = unit_tensor(n).flatten().transpose();
  Index r = tangent.cols() + 1;
  for (const auto& t : cone) {
    rows.row(r).setZero();
    rows(r, flat_index(n, t)) = 1;
    ++r;
  }
  return static_cast<std::int64_t>(rank(rows)) - 1;
}

TangentResult orbit_cone_tangent_dim(int n, std::uint64_t seed) {
  const auto target = main_theorem_bound(n);
  const auto cone = build_w(n);
  TangentResult result;
  for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
    const std::uint64_t s = seed + attempt;
    const auto dim = orbit_cone_tangent_dim_at(random_tensor_on(cone, s));
    result.attempts.push_back({s, dim});
    result.value = std::max(result.value, dim);
    if (dim >= target) break;
  }
  return result;
}

std::int64_t main_theorem_bound(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::int64_t m = n;
  const std::int64_t numerator = 2 * m * m * m + 3 * m * m - 2 * m - 3;
  if (numerator % 3 != 0) throw InvariantViolation("bound numerator not divisible by 3 at n = " + std::to_string(n));
  return numerator / 3;
}

}  // namespace bordersub
