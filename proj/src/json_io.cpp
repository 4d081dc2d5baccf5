#include "bordersub/json_io.hpp"

#include <fstream>

namespace bordersub {
namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid ") + what + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("invalid ") + what + ": " + e.what());
  }
}

int read_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw FormatError("expected an object with integer field \"n\"");
  }
  return j.at("n").get<int>();
}

Triple read_triple(const Json& j) {
  if (!j.is_array() || j.size() < 3) throw FormatError("triple must be an array [i, j, k]");
  for (std::size_t idx = 0; idx < 3; ++idx) {
    if (!j[idx].is_number_integer()) throw FormatError("triple indices must be integers");
  }
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

std::vector<std::int64_t> read_ints(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw FormatError(std::string("missing integer array \"") + key + "\"");
  std::vector<std::int64_t> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw FormatError(std::string("non-integer in \"") + key + "\"");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Json to_json(const Triple& t) { return Json::array({t.i, t.j, t.k}); }

Json to_json(const Support& s) {
  Json triples = Json::array();
  for (const auto& t : s) triples.push_back(to_json(t));
  return {{"n", s.n()}, {"triples", triples}};
}

Json to_json(const Tensor3& t) {
  Json entries = Json::array();
  for (const auto& [x, v] : t.entries()) entries.push_back(Json::array({x.i, x.j, x.k, format_rational(v)}));
  return {{"n", t.n()}, {"entries", entries}};
}

Json to_json(const TorusWeight& tw) {
  return {{"n", tw.n()}, {"lambda", tw.lambda()}, {"mu", tw.mu()}, {"nu", tw.nu()}};
}

Json to_json(const Monomial& m) {
  Json factors = Json::array();
  for (const auto& t : m.factors()) factors.push_back(to_json(t));
  return {{"n", m.n()}, {"factors", factors}};
}

Json to_json(const TightWitness& w) {
  return {{"n", w.n}, {"tauA", w.tau_a}, {"tauB", w.tau_b}, {"tauC", w.tau_c}};
}

Support support_from_json(const Json& j) {
  return guarded("support", [&] {
    const int n = read_n(j);
    if (!j.contains("triples") || !j.at("triples").is_array()) throw FormatError("missing array \"triples\"");
    std::vector<Triple> triples;
    for (const auto& t : j.at("triples")) triples.push_back(read_triple(t));
    return Support(n, std::move(triples));
  });
}

Tensor3 tensor_from_json(const Json& j) {
  return guarded("tensor", [&] {
    const int n = read_n(j);
    if (!j.contains("entries") || !j.at("entries").is_array()) throw FormatError("missing array \"entries\"");
    Tensor3 t(n);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 4 || !e[3].is_string()) {
        throw FormatError("tensor entry must be [i, j, k, \"num/den\"]");
      }
      const Triple x = read_triple(e);
      if (t.at(x) != 0) throw FormatError("duplicate entry " + to_string(x));
      const Rational v = parse_rational(e[3].get<std::string>());
      if (v == 0) throw FormatError("zero coefficient stored at " + to_string(x));
      t.set(x, v);
    }
    return t;
  });
}

TorusWeight torus_weight_from_json(const Json& j) {
  return guarded("certificate", [&] {
    const int n = read_n(j);
    TorusWeight tw(read_ints(j, "lambda"), read_ints(j, "mu"), read_ints(j, "nu"));
    if (tw.n() != n) throw FormatError("\"n\" does not match the array lengths");
    return tw;
  });
}

Monomial monomial_from_json(const Json& j) {
  return guarded("monomial", [&] {
    const int n = read_n(j);
    if (!j.contains("factors") || !j.at("factors").is_array()) throw FormatError("missing array \"factors\"");
    std::vector<Triple> factors;
    for (const auto& t : j.at("factors")) factors.push_back(read_triple(t));
    return Monomial(n, std::move(factors));
  });
}

TightWitness tight_witness_from_json(const Json& j) {
  return guarded("witness", [&] {
    TightWitness w{read_n(j), read_ints(j, "tauA"), read_ints(j, "tauB"), read_ints(j, "tauC")};
    for (const auto* v : {&w.tau_a, &w.tau_b, &w.tau_c}) {
      if (static_cast<int>(v->size()) != w.n) throw FormatError("witness arrays must have length n");
    }
    return w;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace bordersub
