#include "bordersub/monomials.hpp"

#include <doctest.h>

#include <random>

using namespace bordersub;

TEST_CASE("torus invariance") {
  CHECK(is_torus_invariant(Monomial(1, {{1, 1, 1}})));
  CHECK(is_torus_invariant(Monomial(3, {{1, 2, 3}, {2, 1, 1}, {3, 3, 2}})));
  CHECK(is_torus_invariant(Monomial(3, {{2, 3, 1}, {3, 2, 2}, {1, 1, 3}})));
  CHECK(is_torus_invariant(Monomial(3, {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}})));
  CHECK_FALSE(is_torus_invariant(Monomial(3, {{1, 2, 3}})));
  CHECK_THROWS_AS(Monomial(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(2, {{3, 1, 1}}), std::out_of_range);
  CHECK(Monomial(2, {{2, 1, 1}, {1, 2, 2}}) == Monomial(2, {{1, 2, 2}, {2, 1, 1}}));
  CHECK(to_string(Monomial(2, {{2, 1, 1}, {1, 2, 2}})) == "x122*x211");
}

TEST_CASE("generator family") {
  CHECK(generator_family(1).size() == 1);
  CHECK(generator_family(3).size() == 14);
  CHECK(generator_family(4).size() == 30);
  for (int n = 1; n <= 5; ++n) {
    const auto family = generator_family(n);
    const auto w = build_w(n);
    for (const auto& m : family) {
      CHECK(is_torus_invariant(m));
      bool inside = true;
      for (const auto& t : m.factors()) inside = inside && w.contains(t);
      CHECK_FALSE(inside);
    }
  }
}

TEST_CASE("invariant monomials within a support") {
  CHECK(invariant_monomials_within(build_w(3), 3).empty());
  CHECK(invariant_monomials_within(build_w(3), 9).empty());
  const auto full2 = invariant_monomials_within(Support(2, all_triples(2)), 1);
  CHECK(full2 == std::vector<Monomial>{Monomial(2, {{1, 1, 1}}), Monomial(2, {{2, 2, 2}})});
  const Support cyclic(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  const auto found = invariant_monomials_within(cyclic, 3);
  REQUIRE(found.size() == 1);
  CHECK(found.front() == Monomial(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
  CHECK(find_invariant_monomial_within(cyclic, 3).has_value());
  CHECK_FALSE(find_invariant_monomial_within(cyclic, 2).has_value());
}

TEST_CASE("enumeration is graded-lexicographic and closed") {
  const auto ms = invariant_monomials_within(Support(2, all_triples(2)), 4);
  for (std::size_t a = 1; a < ms.size(); ++a) CHECK(ms[a - 1] < ms[a]);
  for (const auto& m : ms) CHECK(is_torus_invariant(m));
  // degree 2 over [2]^3: x111^2, x111 x222, x222^2 and the three pair generators
  std::size_t degree_two = 0;
  for (const auto& m : ms) degree_two += m.degree() == 2 ? 1 : 0;
  CHECK(degree_two == 6);
}

TEST_CASE("search and enumeration agree") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Triple> chosen;
    for (const auto& t : off_diagonal_triples(n)) {
      if (rng() % 3 == 0) chosen.push_back(t);
    }
    const Support s(n, chosen);
    const int d = 4;
    const auto witness = find_invariant_monomial_within(s, d);
    CHECK(witness.has_value() == !invariant_monomials_within(s, d).empty());
    if (witness) {
      CHECK(is_torus_invariant(*witness));
      CHECK(witness->degree() <= d);
      for (const auto& t : witness->factors()) CHECK(s.contains(t));
    }
  }
}

TEST_CASE("invariance is permutation equivariant") {
  std::mt19937_64 rng(42);
  const auto perms = all_permutations(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Triple> factors;
    const int degree = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < degree; ++f) {
      factors.push_back({1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)});
    }
    const Monomial m(3, factors);
    const auto& s = perms[rng() % perms.size()];
    CHECK(is_torus_invariant(m) == is_torus_invariant(apply_permutation(s, m)));
  }
}
