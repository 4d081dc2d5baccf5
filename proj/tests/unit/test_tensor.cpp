#include "bordersub/tensor.hpp"

#include <doctest.h>

#include <random>

using namespace bordersub;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t a = images.size(); a > 1; --a) std::swap(images[a - 1], images[rng() % a]);
  return Permutation(images);
}

Support random_support(int n, std::mt19937_64& rng) {
  std::vector<Triple> chosen;
  for (const auto& t : all_triples(n)) {
    if (rng() % 3 == 0) chosen.push_back(t);
  }
  return Support(n, chosen);
}

}  // namespace

TEST_CASE("unit tensor") {
  const auto u1 = unit_tensor(1);
  CHECK(u1.nnz() == 1);
  CHECK(u1.at({1, 1, 1}) == 1);
  const auto u3 = unit_tensor(3);
  CHECK(u3.support() == Support(3, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}));
  CHECK(unit_tensor(5).support().size() == 5);
}

TEST_CASE("W supports") {
  CHECK(build_w(1).empty());
  CHECK(build_w(3).size() == 13);
  CHECK(build_w(4).size() == 34);
  CHECK(build_w(2) == Support(2, {{2, 1, 1}, {2, 1, 2}, {2, 2, 1}}));
  for (int n = 1; n <= 6; ++n) {
    const auto expected = static_cast<std::size_t>((4 * n * n * n - 3 * n * n - n) / 6);
    CHECK(build_w(n, WVariant::W).size() == expected);
    CHECK(build_w(n, WVariant::WPrime).size() == expected);
    CHECK(build_w(n, WVariant::WDoublePrime).size() == expected);
    CHECK(w_dimension(n) == static_cast<std::int64_t>(expected));
  }
  CHECK(parse_w_variant("W'") == WVariant::WPrime);
  CHECK(parse_w_variant("Wpp") == WVariant::WDoublePrime);
  CHECK_THROWS_AS(parse_w_variant("V"), std::invalid_argument);
}

TEST_CASE("tight U support") {
  CHECK(build_tight_u(2).empty());
  CHECK(build_tight_u(3) == Support(3, {{2, 1, 3}, {2, 3, 1}}));
  std::vector<Triple> progression;
  for (const auto& t : all_triples(3)) {
    if (2 * t.i == t.j + t.k) progression.push_back(t);
  }
  CHECK(diagonal_support(3).union_with(build_tight_u(3)) == Support(3, progression));
  CHECK(build_tight_u(5).is_subset_of(build_w(5)));
}

TEST_CASE("support validation") {
  CHECK_THROWS_AS(Support(2, {{1, 1, 3}}), std::out_of_range);
  CHECK(Support(2, {{1, 2, 1}, {1, 2, 1}}).size() == 1);
}

TEST_CASE("permutation action") {
  const auto id = Permutation::identity(3);
  CHECK(apply_permutation(id, build_w(3)) == build_w(3));
  const Permutation swap({2, 1});
  CHECK(apply_permutation(swap, build_w(2)) == Support(2, {{1, 2, 2}, {1, 2, 1}, {1, 1, 2}}));
  const auto perms = all_permutations(3);
  CHECK(perms.size() == 6);
  for (const auto& s : perms) CHECK(apply_permutation(s, build_w(3)).size() == 13);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_permutation(swap, build_w(3)), DimensionMismatch);
}

TEST_CASE("permutation composition property") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto sigma = random_permutation(n, rng), rho = random_permutation(n, rng);
    const auto s = random_support(n, rng);
    CHECK(apply_permutation(sigma.compose(rho), s) == apply_permutation(sigma, apply_permutation(rho, s)));
  }
}

TEST_CASE("tensor from support") {
  CHECK(tensor_from_support(Support(2), std::vector<Rational>{}).is_zero());
  CHECK(tensor_from_support(Support(1, {{1, 1, 1}}), std::vector<Rational>{1}) == unit_tensor(1));
  CHECK_THROWS_AS(tensor_from_support(Support(1, {{1, 1, 1}}), std::vector<Rational>{0}), std::invalid_argument);
  const auto t = random_tensor_on(build_w(3), 5);
  CHECK(t.nnz() == 13);
  CHECK(t.support() == build_w(3));
  for (const auto& [x, v] : t.entries()) {
    CHECK(v != 0);
    CHECK(abs(v) <= 3);
  }
  CHECK(random_tensor_on(build_w(3), 5) == t);
}

TEST_CASE("tensor arithmetic keeps zero entries absent") {
  auto t = unit_tensor(2);
  Tensor3 minus(2);
  minus.set({1, 1, 1}, -1);
  t += minus;
  CHECK(t.nnz() == 1);
  CHECK(t.at({1, 1, 1}) == 0);
  t *= Rational(0);
  CHECK(t.is_zero());
  CHECK_THROWS_AS(t.set({3, 1, 1}, 1), std::out_of_range);
}

TEST_CASE("flat index round trip") {
  for (const auto& t : all_triples(4)) CHECK(triple_at(4, flat_index(4, t)) == t);
}

TEST_CASE("change of basis") {
  MatrixQ p = MatrixQ::Identity(2, 2);
  p(0, 1) = 1;
  const auto t = transform(p, MatrixQ::Identity(2, 2), MatrixQ::Identity(2, 2), unit_tensor(2));
  // a_2 -> a_1 + a_2 on the first factor
  CHECK(t.at({1, 1, 1}) == 1);
  CHECK(t.at({1, 2, 2}) == 1);
  CHECK(t.at({2, 2, 2}) == 1);
  CHECK(t.nnz() == 3);
}
