#pragma once

// Nullcone membership of coordinate subspaces under the torus stabilizing
// the unit tensor. By Hilbert-Mumford, span{a_i b_j c_k : (i,j,k) in S} lies
// in the nullcone iff some integer cocharacter has weight >= 1 on all of S.

#include "bordersub/torus.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bordersub {

struct FeasibilityOutcome {
  bool feasible = false;
  std::optional<TorusWeight> certificate;  // present iff feasible
};

/// Exact decision with an integer certificate when feasible. The certificate
/// is gcd-reduced and has lambda_1 = mu_1 = 0; it is validated before return
/// (InvariantViolation otherwise).
FeasibilityOutcome nullcone_feasible(const Support& s);

struct MaximalityReport {
  bool maximal = false;
  std::vector<Triple> extendable;  // triples t outside S with S + t still feasible
};

/// Throws PreconditionViolation when S itself is infeasible.
MaximalityReport is_maximal_nullcone_support(const Support& s);

struct EnumerationOptions {
  int cap = 3;               // largest n for which the result is claimed complete
  bool best_effort = false;  // allow n > cap
  std::uint64_t max_lp_calls = 0;  // 0 = unlimited
};

struct ComponentList {
  std::vector<Support> components;  // canonical (sorted) order
  bool complete = false;
  std::uint64_t chambers = 0;
  std::uint64_t lp_calls = 0;
};

/// Every maximal feasible support of format n. A maximal feasible S equals
/// the positive support of a generic cocharacter, so the search walks the
/// chambers of the arrangement {weight(t) = 0 : t off-diagonal}: a depth-first
/// branch on each triple's sign with LP pruning. Throws PreconditionViolation
/// when n > cap without best_effort.
ComponentList enumerate_maximal_components(int n, const EnumerationOptions& options = {});

}  // namespace bordersub
