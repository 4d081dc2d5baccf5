#pragma once

// Lie algebra computations for gl(A) + gl(B) + gl(C) acting on A (x) B (x) C.
//
// Dimension conventions: "gl3" counts inside gl(A)+gl(B)+gl(C); "quotient"
// counts modulo the two-dimensional kernel {(a Id, b Id, c Id) : a+b+c = 0}
// of the action, i.e. inside the Lie algebra of the faithful group.

#include "bordersub/linalg.hpp"
#include "bordersub/tensor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bordersub {

/// (x, y, z) with x acting on A, y on B, z on C.
struct LieTriple {
  MatrixQ x, y, z;

  static LieTriple zero(int n);
  /// The basis element with a single 1 at (row, col) of factor 0 (x), 1 (y) or 2 (z).
  static LieTriple unit(int n, int factor, int row, int col);
  /// Coordinates ordered factor-major then row-major, length 3n^2.
  static LieTriple from_coordinates(int n, const VectorQ& coords);

  int n() const { return static_cast<int>(x.rows()); }
  LieTriple& operator+=(const LieTriple& other);
  friend LieTriple operator+(LieTriple a, const LieTriple& b) { return a += b; }
};

enum class Convention { Gl3, Quotient };
std::string to_string(Convention c);

/// Derivation action: x(a_i) (x) b_j (x) c_k + a_i (x) y(b_j) (x) c_k + a_i (x) b_j (x) z(c_k),
/// extended linearly.
Tensor3 act(const LieTriple& lt, const Tensor3& t);

/// n^3 x 3n^2 matrix of lt -> act(lt, T); column b is act(basis element b, T).
MatrixQ action_matrix(const Tensor3& t);

/// dim {lt : act(lt, T) = 0}, gl3 convention.
std::int64_t stabilizer_dim(const Tensor3& t);
/// Kernel basis of the action matrix; columns are LieTriple coordinates.
MatrixQ stabilizer_basis(const Tensor3& t);

/// Dimension of the GL^3 orbit of the unit tensor: rank of the action at it.
std::int64_t orbit_dim_unit(int n);

/// Conditions on lt: act(lt, M + w) in <M, W> for all w in W, with M the unit
/// tensor. Returns the kernel dimension, gl3 convention.
std::int64_t cone_stabilizer_dim(int n, Convention convention = Convention::Quotient);

struct ConeStabilizerStructure {
  MatrixQ basis;                  // 3n^2 x dim, canonical kernel basis
  std::int64_t dim_gl3 = 0;
  std::int64_t expected_shape_dim = 0;  // dim of {x lower, y,z upper, equal diagonal sums}
  bool triangular = true;
  bool equal_diagonal_sums = true;
  std::vector<std::string> violations;
  bool ok() const { return triangular && equal_diagonal_sums && dim_gl3 == expected_shape_dim; }
};

/// Kernel basis plus a check of every basis element: x lower triangular,
/// y and z upper triangular, x_ss + y_ss + z_ss independent of s.
ConeStabilizerStructure cone_stabilizer_structure(int n);

struct TangentAttempt {
  std::uint64_t seed = 0;
  std::int64_t dim = 0;
};

struct TangentResult {
  std::int64_t value = 0;  // max over attempts, projective dimension
  std::vector<TangentAttempt> attempts;
};

/// Projective dimension of act(gl3, M + w) + <M, W> at a random w in W with
/// coefficients in {+-1, +-2, +-3}. Reseeds (seed, seed+1, seed+2) while the
/// rank stays below the closed-form bound.
TangentResult orbit_cone_tangent_dim(int n, std::uint64_t seed);

/// Rank of the tangent system for one explicit w in W.
std::int64_t orbit_cone_tangent_dim_at(const Tensor3& w);

/// (2n^3 + 3n^2 - 2n - 3) / 3; throws InvariantViolation if not integral.
std::int64_t main_theorem_bound(int n);

}  // namespace bordersub
