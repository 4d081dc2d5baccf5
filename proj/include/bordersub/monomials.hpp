#pragma once

// Monomials in the coordinates x_ijk and their weights under the torus
// stabilizing the unit tensor.

#include "bordersub/tensor.hpp"

#include <optional>
#include <vector>

namespace bordersub {

/// Degree cap used when comparing monomial obstructions with the LP verdict.
constexpr int duality_degree_cap(int n) { return 3 * n; }

/// Monomial as a sorted multiset of factor triples; x*y == y*x.
class Monomial {
 public:
  Monomial(int n, std::vector<Triple> factors);

  int n() const { return n_; }
  int degree() const { return static_cast<int>(factors_.size()); }
  const std::vector<Triple>& factors() const { return factors_; }

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic: degree first, then factor lists.
  bool operator<(const Monomial& other) const;

 private:
  int n_;
  std::vector<Triple> factors_;
};

std::string to_string(const Monomial& m);

/// Torus invariant iff each index value occurs equally often in the first,
/// second and third slots.
bool is_torus_invariant(const Monomial& m);

Monomial apply_permutation(const Permutation& s, const Monomial& m);

/// x_iii, x_iij x_jji, x_iji x_jij, x_ijj x_jii (i < j) and the two cyclic
/// products x_ijk x_jki x_kij per 3-subset; n + 3 C(n,2) + 2 C(n,3) in total.
std::vector<Monomial> generator_family(int n);

/// All invariant monomials of degree <= max_degree with every factor in S,
/// in graded lexicographic order.
std::vector<Monomial> invariant_monomials_within(const Support& s, int max_degree);

/// One invariant monomial within S of degree <= max_degree, if any exists.
/// Searches over slot-count imbalance states, so it stays cheap where full
/// enumeration would not.
std::optional<Monomial> find_invariant_monomial_within(const Support& s, int max_degree);

}  // namespace bordersub
