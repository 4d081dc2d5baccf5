#pragma once

// Tight supports: injective integer gradings tau_A, tau_B, tau_C of [n] with
// tau_A(i) + tau_B(j) + tau_C(k) = 0 on every triple of the support.

#include "bordersub/tensor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bordersub {

struct TightWitness {
  int n = 0;
  std::vector<std::int64_t> tau_a, tau_b, tau_c;
  bool operator==(const TightWitness&) const = default;
};

/// tau_A(i) = 3 - 2i, tau_B(j) = j, tau_C(k) = k - 3, which grades the
/// support {(i,j,k) : 2i = j + k}.
TightWitness arithmetic_progression_witness(int n);

/// Both sequences are injective and the sum vanishes on every triple of S.
/// Throws DimensionMismatch when n differs.
bool check_tight_witness(const Support& s, const TightWitness& w);

/// Exact decision. The grading equations cut out a linear subspace of Q^{3n};
/// S is tight iff no collision hyperplane tau_X(p) = tau_X(q) contains it.
/// When tight, a point off every collision hyperplane is found by a seeded
/// search over basis coefficients, scaled to integers, shifted so tau_C(n) = 0
/// and divided by the gcd of its entries.
std::optional<TightWitness> find_tight_witness(const Support& s);

}  // namespace bordersub
