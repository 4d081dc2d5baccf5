#pragma once

// Run reports shared by the command-line tool and the acceptance runner, and
// the composite commands built from several modules.

#include "bordersub/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bordersub {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;

  bool all_pass() const;
  /// Keys are sorted, so the dump is byte-stable.
  Json to_json() const;
  std::string to_table() const;
};

/// Degeneration certificate for T = (full diagonal) + (off-diagonal part):
/// the off-diagonal support goes through the nullcone LP and the resulting
/// cocharacter is re-validated against T. outputs.status is "certified",
/// "refused" (support not in the nullcone; an invariant monomial is given
/// when one of degree <= 3n exists) or "inapplicable" (some T_iii = 0).
RunReport cmd_certify(const Tensor3& t);

/// Validates a supplied cocharacter instead of searching for one.
RunReport cmd_certify(const Tensor3& t, const TorusWeight& certificate);

// Acceptance criteria. Each returns one check per exact comparison.
std::vector<Check> formula_checks(int n_max);
std::vector<Check> stabilizer_checks(int n_max);
std::vector<Check> cone_stabilizer_checks(int n_max);
std::vector<Check> tangent_checks(int n_max, std::uint64_t seed = 1);
std::vector<Check> degeneration_checks(int n_max);
std::vector<Check> size13_component_checks();
/// The enumeration part runs only when enumerate is set.
std::vector<Check> size12_component_checks(bool enumerate);
std::vector<Check> duality_checks(int n_max, int n3_samples, std::uint64_t seed = 8);
std::vector<Check> tightness_checks(int n_max, int n3_samples, std::uint64_t seed = 9);
std::vector<Check> unit_orbit_checks(int n_max, int gl_cases, std::uint64_t seed = 10);

/// Every criterion for n = 1..n_max (1 <= n_max <= 5) plus the fixed
/// examples at n = 3. Throws std::out_of_range for other n_max.
RunReport cmd_reproduce(int n_max);

/// n = 3 cocharacters with positive supports of size 13 (not a permuted
/// W, W' or W'') and of size 12, both maximal.
TorusWeight size13_component_weights();
TorusWeight size12_component_weights();

}  // namespace bordersub
