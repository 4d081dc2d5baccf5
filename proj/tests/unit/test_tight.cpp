#include "bordersub/oracles.hpp"
#include "bordersub/tight.hpp"

#include <doctest.h>

#include <random>

using namespace bordersub;

namespace {

Support progression(int n) { return diagonal_support(n).union_with(build_tight_u(n)); }

}  // namespace

TEST_CASE("witness checking") {
  const TightWitness ap{3, {1, -1, -3}, {1, 2, 3}, {-2, -1, 0}};
  CHECK(arithmetic_progression_witness(3) == ap);
  CHECK(check_tight_witness(progression(3), ap));
  CHECK_FALSE(check_tight_witness(progression(3), TightWitness{3, {0, 0, 0}, {1, 2, 3}, {-2, -1, 0}}));
  CHECK(check_tight_witness(Support(3), ap));
  CHECK_THROWS_AS(check_tight_witness(Support(2), ap), DimensionMismatch);
  for (int n = 2; n <= 6; ++n) CHECK(check_tight_witness(progression(n), arithmetic_progression_witness(n)));
}

TEST_CASE("finding witnesses") {
  for (int n = 1; n <= 6; ++n) {
    const auto w = find_tight_witness(progression(n));
    REQUIRE(w);
    CHECK(check_tight_witness(progression(n), *w));
    CHECK(w->tau_c.back() == 0);
  }
  CHECK_FALSE(find_tight_witness(Support(2, {{1, 1, 1}, {1, 1, 2}})));
  CHECK_FALSE(find_tight_witness(build_w(3).union_with(diagonal_support(3))));
  CHECK(find_tight_witness(Support(4)).has_value());
}

TEST_CASE("witness output is reproducible") {
  CHECK(find_tight_witness(progression(4)) == find_tight_witness(progression(4)));
}

TEST_CASE("exhaustive oracle agrees on named cases") {
  CHECK(tight_by_exhaustive_search(progression(3)).has_value());
  CHECK_FALSE(tight_by_exhaustive_search(Support(2, {{1, 1, 1}, {1, 1, 2}})));
  CHECK_FALSE(tight_by_exhaustive_search(build_w(3).union_with(diagonal_support(3))));
  const auto w = tight_by_exhaustive_search(progression(3));
  REQUIRE(w);
  CHECK(check_tight_witness(progression(3), *w));
}

TEST_CASE("tightness is permutation invariant") {
  std::mt19937_64 rng(71);
  const auto perms = all_permutations(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Triple> chosen;
    for (const auto& t : all_triples(3)) {
      if (rng() % 5 == 0) chosen.push_back(t);
    }
    const Support s(3, chosen);
    const bool base = find_tight_witness(s).has_value();
    CHECK(find_tight_witness(apply_permutation(perms[rng() % perms.size()], s)).has_value() == base);
  }
}
