#pragma once

// Membership in the GL(A) x GL(B) x GL(C) orbit of the unit tensor, decided
// exactly: a concise tensor lies in the orbit iff, for an invertible slice
// combination X0, the matrices S_i X0^{-1} commute pairwise and are each
// diagonalizable over C.
//
// Orbit members are exactly the tensors of subrank n. A tensor of border
// subrank n (for example unit + generic w in W) is usually NOT a member.

#include "bordersub/tensor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bordersub {

/// Contraction slices: side 0 gives S_i[j,k] = T_ijk, side 1 gives
/// S_j[i,k] = T_ijk, side 2 gives S_k[i,j] = T_ijk.
struct SliceFamily {
  int n = 0;
  std::vector<MatrixQ> slices;
};

SliceFamily slices(const Tensor3& t, int side);

/// The three n x n^2 flattenings all have rank n.
bool is_concise(const Tensor3& t);

/// Dense coefficient vector, constant term first.
using Polynomial = std::vector<Rational>;

/// det(tI - M) via Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const MatrixQ& m);
/// Minimal polynomial has no repeated root, decided as: the squarefree part
/// p / gcd(p, p') of the characteristic polynomial annihilates m.
bool is_diagonalizable(const MatrixQ& m);

enum class OrbitVerdict { Member, NonMember, Inconclusive };
std::string to_string(OrbitVerdict v);

struct OrbitResult {
  OrbitVerdict verdict = OrbitVerdict::Inconclusive;
  std::string witness;  // why: non-concise, non-commuting pair, non-diagonalizable slice, ...
};

/// Tries each basis slice, then up to 5 seeded random combinations with
/// coefficients in {+-1, +-2, +-3}, for an invertible X0 on each side.
OrbitResult unit_orbit_member(const Tensor3& t, std::uint64_t seed);

}  // namespace bordersub
