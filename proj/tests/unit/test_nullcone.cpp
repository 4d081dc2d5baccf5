#include "bordersub/monomials.hpp"
#include "bordersub/nullcone.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace bordersub;

namespace {

void check_certificate(const Support& s, const FeasibilityOutcome& out) {
  REQUIRE(out.feasible);
  REQUIRE(out.certificate);
  for (const auto& t : s) CHECK(weight_of(*out.certificate, t) >= 1);
}

Support random_off_diagonal(int n, std::mt19937_64& rng, int one_in) {
  std::vector<Triple> chosen;
  for (const auto& t : off_diagonal_triples(n)) {
    if (rng() % static_cast<std::uint64_t>(one_in) == 0) chosen.push_back(t);
  }
  return Support(n, chosen);
}

}  // namespace

TEST_CASE("feasibility examples") {
  const auto w3 = build_w(3);
  check_certificate(w3, nullcone_feasible(w3));
  CHECK_FALSE(nullcone_feasible(Support(3, {{1, 1, 1}})).feasible);
  CHECK_FALSE(nullcone_feasible(build_w(3).with({2, 2, 2})).feasible);
  CHECK_FALSE(nullcone_feasible(Support(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}})).feasible);
  const auto small = positive_support(TorusWeight({-2, -1, 0}, {3, -2, 0}, {-1, 3, 0}));
  check_certificate(small, nullcone_feasible(small));
  const auto empty = nullcone_feasible(Support(3));
  CHECK(empty.feasible);
  CHECK(*empty.certificate == TorusWeight::zero(3));
  check_certificate(Support(2, {{1, 2, 2}}), nullcone_feasible(Support(2, {{1, 2, 2}})));
  CHECK_FALSE(nullcone_feasible(Support(2, {{1, 2, 2}, {2, 1, 1}})).feasible);
}

TEST_CASE("certificates are reduced") {
  const auto out = nullcone_feasible(build_w(4));
  REQUIRE(out.certificate);
  const auto& c = *out.certificate;
  CHECK(c.lambda()[0] == 0);
  CHECK(c.mu()[0] == 0);
  BigInt g(0);
  for (int i = 0; i < 4; ++i) {
    g = gcd(g, BigInt(c.lambda()[static_cast<std::size_t>(i)]));
    g = gcd(g, BigInt(c.mu()[static_cast<std::size_t>(i)]));
  }
  CHECK(g == 1);
}

TEST_CASE("downward closure on random chains") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    auto s = random_off_diagonal(n, rng, 2);
    bool feasible = nullcone_feasible(s).feasible;
    while (!s.empty()) {
      auto triples = s.triples();
      triples.erase(triples.begin() + static_cast<long>(rng() % triples.size()));
      s = Support(n, triples);
      const bool now = nullcone_feasible(s).feasible;
      if (feasible) CHECK(now);
      feasible = now;
    }
  }
}

TEST_CASE("permutation equivariance on named supports") {
  const std::vector<Support> named{
      build_w(3),
      build_w(3, WVariant::WPrime),
      build_w(3, WVariant::WDoublePrime),
      positive_support(TorusWeight({5, 0, 2}, {0, 1, -3}, {-5, -1, 1})),
      positive_support(TorusWeight({-2, -1, 0}, {3, -2, 0}, {-1, 3, 0})),
      Support(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}),
      build_w(3).with({1, 2, 2}),
  };
  for (const auto& s : named) {
    const bool base = nullcone_feasible(s).feasible;
    for (const auto& p : all_permutations(3)) CHECK(nullcone_feasible(apply_permutation(p, s)).feasible == base);
  }
}

TEST_CASE("duality with invariant monomials") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const auto s = random_off_diagonal(n, rng, 2);
    const bool infeasible = !nullcone_feasible(s).feasible;
    CHECK(infeasible == find_invariant_monomial_within(s, duality_degree_cap(n)).has_value());
  }
}

TEST_CASE("maximality") {
  CHECK(is_maximal_nullcone_support(build_w(3)).maximal);
  CHECK(is_maximal_nullcone_support(positive_support(TorusWeight({-2, -1, 0}, {3, -2, 0}, {-1, 3, 0}))).maximal);
  CHECK(is_maximal_nullcone_support(Support(1)).maximal);
  const auto partial = is_maximal_nullcone_support(Support(3, {{2, 1, 1}}));
  CHECK_FALSE(partial.maximal);
  CHECK_FALSE(partial.extendable.empty());
  CHECK_THROWS_AS(is_maximal_nullcone_support(Support(2, {{1, 1, 1}})), PreconditionViolation);
}

TEST_CASE("component enumeration, small n") {
  const auto one = enumerate_maximal_components(1);
  CHECK(one.complete);
  REQUIRE(one.components.size() == 1);
  CHECK(one.components.front().empty());

  const auto two = enumerate_maximal_components(2);
  CHECK(two.complete);
  std::set<Support> found(two.components.begin(), two.components.end());
  CHECK(found.size() == two.components.size());
  for (auto v : {WVariant::W, WVariant::WPrime, WVariant::WDoublePrime}) {
    for (const auto& p : all_permutations(2)) CHECK(found.count(apply_permutation(p, build_w(2, v))));
  }
  for (const auto& c : two.components) {
    CHECK(is_maximal_nullcone_support(c).maximal);
    for (const auto& p : all_permutations(2)) CHECK(found.count(apply_permutation(p, c)));
  }
  CHECK(std::is_sorted(two.components.begin(), two.components.end()));

  CHECK_THROWS_AS(enumerate_maximal_components(4), PreconditionViolation);
  EnumerationOptions budget;
  budget.best_effort = true;
  budget.max_lp_calls = 50;
  CHECK_FALSE(enumerate_maximal_components(4, budget).complete);
}
