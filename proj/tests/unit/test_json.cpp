#include "bordersub/json_io.hpp"

#include <doctest.h>

using namespace bordersub;

TEST_CASE("round trips are exact") {
  Tensor3 t(3);
  t.set({2, 1, 1}, Rational(-7) / 3);
  t.set({1, 1, 1}, 1);
  t.set({3, 3, 2}, parse_rational("123456789012345678901/2"));
  const auto jt = to_json(t);
  CHECK(jt.dump() == R"({"entries":[[1,1,1,"1/1"],[2,1,1,"-7/3"],[3,3,2,"123456789012345678901/2"]],"n":3})");
  CHECK(tensor_from_json(jt) == t);
  CHECK(to_json(tensor_from_json(jt)).dump() == jt.dump());

  const auto s = build_w(3);
  CHECK(support_from_json(to_json(s)) == s);
  const TorusWeight tw({0, 4, 6}, {0, -2, -3}, {0, -2, -3});
  CHECK(torus_weight_from_json(to_json(tw)) == tw);
  const Monomial m(3, {{3, 3, 2}, {1, 2, 3}, {2, 1, 1}});
  CHECK(monomial_from_json(to_json(m)) == m);
  const auto w = arithmetic_progression_witness(4);
  CHECK(tight_witness_from_json(to_json(w)) == w);
}

TEST_CASE("unsorted input is canonicalized") {
  const auto j = Json::parse(R"({"n":2,"triples":[[2,2,1],[1,1,1],[2,2,1]]})");
  CHECK(to_json(support_from_json(j)).dump() == R"({"n":2,"triples":[[1,1,1],[2,2,1]]})");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(support_from_json(Json::parse(R"({"triples":[]})")), FormatError);
  CHECK_THROWS_AS(support_from_json(Json::parse(R"({"n":2,"triples":[[1,2,3]]})")), FormatError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"n":2,"entries":[[1,1,1,"0/1"]]})")), FormatError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"n":2,"entries":[[1,1,1,"1/0"]]})")), FormatError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"n":2,"entries":[[1,1,1,1]]})")), FormatError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"n":2,"entries":[[1,1,1,"1"],[1,1,1,"2"]]})")), FormatError);
  CHECK_THROWS_AS(torus_weight_from_json(Json::parse(R"({"n":1,"lambda":[1],"mu":[1],"nu":[1]})")), FormatError);
  CHECK_THROWS_AS(torus_weight_from_json(Json::parse(R"({"n":2,"lambda":[0],"mu":[0],"nu":[0]})")), FormatError);
  CHECK_THROWS_AS(monomial_from_json(Json::parse(R"({"n":2,"factors":[]})")), FormatError);
  CHECK_THROWS_AS(tight_witness_from_json(Json::parse(R"({"n":2,"tauA":[1],"tauB":[1,2],"tauC":[1,2]})")), FormatError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), FormatError);
}
