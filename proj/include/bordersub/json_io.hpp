#pragma once

// JSON forms of the library's value types. Entries and triples are written
// in lexicographic order and coefficients as "num/den" strings, so
// serialisation is canonical and parse(serialise(x)) == x.
//
//   Tensor3      {"n": 3, "entries": [[1, 1, 1, "1/1"], ...]}
//   Support      {"n": 3, "triples": [[2, 1, 1], ...]}
//   TorusWeight  {"n": 3, "lambda": [...], "mu": [...], "nu": [...]}
//   Monomial     {"n": 3, "factors": [[1, 2, 3], ...]}
//   TightWitness {"n": 3, "tauA": [...], "tauB": [...], "tauC": [...]}

#include "bordersub/monomials.hpp"
#include "bordersub/tight.hpp"
#include "bordersub/torus.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bordersub {

using Json = nlohmann::json;

/// Malformed or schema-violating input.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Triple& t);
Json to_json(const Support& s);
Json to_json(const Tensor3& t);
Json to_json(const TorusWeight& tw);
Json to_json(const Monomial& m);
Json to_json(const TightWitness& w);

Support support_from_json(const Json& j);
Tensor3 tensor_from_json(const Json& j);
TorusWeight torus_weight_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
TightWitness tight_witness_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace bordersub
