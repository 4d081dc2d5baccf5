#include "bordersub/linalg.hpp"
#include "bordersub/lp.hpp"

#include <doctest.h>

#include <random>

using namespace bordersub;

namespace {

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  for (;;) {
    const auto num = static_cast<long>(rng() % 41) - 20;
    const auto den = static_cast<long>(rng() % 9) + 1;
    if (nonzero && num == 0) continue;
    return Rational(num) / Rational(den);
  }
}

MatrixQ random_matrix(std::mt19937_64& rng, Index rows, Index cols, int zero_percent) {
  MatrixQ m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      m(r, c) = static_cast<int>(rng() % 100) < zero_percent ? Rational(0) : random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
  CHECK(format_rational(parse_rational("7")) == "7/1");
  CHECK(format_rational(parse_rational("0/5")) == "0/1");
  CHECK_THROWS_AS(parse_rational("3/-6"), std::invalid_argument);  // sign belongs to the numerator
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  const auto big = parse_rational("123456789012345678901234567891/2");
  CHECK(format_rational(big) == "123456789012345678901234567891/2");
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_rational(rng, true), b = random_rational(rng, true), c = random_rational(rng);
    CHECK((a / b) * (b / a) == 1);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
  Rational third = Rational(1) / 3;
  CHECK(third + third + third == 1);
  CHECK(to_int64(Rational(-12) / 4) == -3);
  CHECK_THROWS_AS(to_int64(Rational(1) / 2), std::domain_error);
  CHECK(gcd(BigInt(12), BigInt(-18)) == 6);
  CHECK(lcm(BigInt(4), BigInt(6)) == 12);
}

TEST_CASE("rref is canonical and kernel vectors are annihilated") {
  MatrixQ m(3, 4);
  m << 1, 2, 0, 1,  //
      2, 4, 1, 3,   //
      3, 6, 1, 4;
  const auto form = rref(m);
  CHECK(form.rank() == 2);
  CHECK(form.pivots == std::vector<Index>{0, 2});
  MatrixQ other(2, 4);
  other << 0, 0, 1, 1,  //
      2, 4, 0, 2;
  CHECK(rref(other).rows == form.rows);
  const MatrixQ k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).isZero());
}

TEST_CASE("Bareiss rank agrees with Gauss-Jordan rank") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 7), cols = 1 + static_cast<Index>(rng() % 7);
    MatrixQ m = random_matrix(rng, rows, cols, 40);
    if (rows > 2) m.row(rows - 1) = m.row(0) * Rational(3) - m.row(1);
    CHECK(rank(m) == rref(m).rank());
    CHECK(kernel_basis(m).cols() + rank(m) == cols);
  }
}

TEST_CASE("inverse") {
  MatrixQ m(2, 2);
  m << 2, 1, 1, 1;
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv - MatrixQ::Identity(2, 2)).isZero());
  MatrixQ singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("linear subspace membership by residue") {
  VectorQ a(3), b(3), c(3);
  a << 1, 1, 0;
  b << 0, 1, 1;
  c << 1, 0, -1;
  auto s = LinearSubspace<Rational>::spanned_by(3, std::vector<VectorQ>{a, b});
  CHECK(s.dim() == 2);
  CHECK(s.contains(c));
  CHECK(s.contains(VectorQ::Zero(3)));
  VectorQ e(3);
  e << 1, 0, 0;
  CHECK_FALSE(s.contains(e));
  s.include(e);
  CHECK(s.dim() == 3);
}

TEST_CASE("exact feasibility") {
  // x >= 1, y >= 1, -x - y >= -1 is infeasible
  MatrixQ a(3, 2);
  a << 1, 0, 0, 1, -1, -1;
  VectorQ b(3);
  b << 1, 1, -1;
  CHECK_FALSE(find_feasible_point<Rational>(a, b));
  b(2) = -3;
  const auto x = find_feasible_point<Rational>(a, b);
  REQUIRE(x);
  const VectorQ slack = a * *x - b;
  for (Index i = 0; i < slack.size(); ++i) CHECK(slack[i] >= 0);
  // Free variables may need negative values.
  MatrixQ neg(1, 1);
  neg << -1;
  VectorQ rhs(1);
  rhs << 5;
  const auto y = find_feasible_point<Rational>(neg, rhs);
  REQUIRE(y);
  CHECK((*y)[0] <= -5);
  CHECK(find_feasible_point<Rational>(MatrixQ(0, 2), VectorQ(0)));
}
