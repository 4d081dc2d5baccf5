#include "bordersub/orbit.hpp"

#include <doctest.h>

using namespace bordersub;

TEST_CASE("conciseness") {
  for (int n = 1; n <= 4; ++n) CHECK(is_concise(unit_tensor(n)));
  Tensor3 simple(2);
  simple.set({1, 1, 1}, 1);
  CHECK_FALSE(is_concise(simple));
  CHECK(is_concise(unit_tensor(3) + random_tensor_on(build_w(3), 3)));
}

TEST_CASE("characteristic polynomial and diagonalizability") {
  MatrixQ m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(characteristic_polynomial(m) == Polynomial{-2, -5, 1});
  MatrixQ jordan(2, 2);
  jordan << 1, 1, 0, 1;
  CHECK_FALSE(is_diagonalizable(jordan));
  CHECK(is_diagonalizable(MatrixQ::Identity(3, 3)));
  MatrixQ rotation(2, 2);
  rotation << 0, -1, 1, 0;  // eigenvalues +-i: diagonalizable over C
  CHECK(is_diagonalizable(rotation));
  MatrixQ nilpotent = MatrixQ::Zero(3, 3);
  nilpotent(0, 2) = 1;
  CHECK_FALSE(is_diagonalizable(nilpotent));
}

TEST_CASE("unit orbit membership") {
  for (int n = 1; n <= 6; ++n) CHECK(unit_orbit_member(unit_tensor(n), 0).verdict == OrbitVerdict::Member);
  Tensor3 w(2);
  w.set({1, 1, 2}, 1);
  w.set({1, 2, 1}, 1);
  w.set({2, 1, 1}, 1);
  const auto ws = unit_orbit_member(w, 0);
  CHECK(ws.verdict == OrbitVerdict::NonMember);
  CHECK_FALSE(ws.witness.empty());
  auto rank_two = unit_tensor(2);
  rank_two.set({2, 1, 2}, 1);
  CHECK(unit_orbit_member(rank_two, 0).verdict == OrbitVerdict::Member);
  Tensor3 simple(2);
  simple.set({1, 1, 1}, 1);
  CHECK(unit_orbit_member(simple, 0).verdict == OrbitVerdict::NonMember);
  CHECK(to_string(OrbitVerdict::NonMember) == "non_member");
}

TEST_CASE("orbit verdict survives a change of basis") {
  MatrixQ p(3, 3), q(3, 3), r(3, 3);
  p << 1, 2, 0, 0, 1, 1, 1, 0, 1;
  q << 2, 1, 1, 1, 1, 0, 0, 0, 1;
  r << 1, 0, 0, 3, 1, 0, -1, 2, 1;
  CHECK(unit_orbit_member(transform(p, q, r, unit_tensor(3)), 4).verdict == OrbitVerdict::Member);
  auto generic = unit_tensor(3) + random_tensor_on(build_w(3), 4);
  const auto before = unit_orbit_member(generic, 4).verdict;
  CHECK(unit_orbit_member(transform(p, q, r, generic), 4).verdict == before);
}
