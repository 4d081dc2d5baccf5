#pragma once

// Brute-force reference procedures. They share no code path with the
// decision procedures they are compared against and are meant for tests.

#include "bordersub/tight.hpp"

#include <cstdint>
#include <optional>

namespace bordersub {

/// Backtracking over injective integer maps. The shift symmetry
/// (a, b, -a-b) is used to pin the first constrained tau_A and tau_B values
/// to 0; every other constrained value ranges over [-h, h] with h = (3n)^2
/// unless half_width is positive. Forced values are propagated along the
/// triples. Unconstrained positions receive fresh values at the end.
std::optional<TightWitness> tight_by_exhaustive_search(const Support& s, std::int64_t half_width = 0);

/// Number of triples of [n]^3 satisfying the variant's defining condition,
/// counted with an explicit triple loop.
std::int64_t count_w_by_enumeration(int n, WVariant variant);

}  // namespace bordersub
