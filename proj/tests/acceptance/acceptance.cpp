// One PASS/FAIL line per acceptance criterion; failing checks are listed
// underneath. Exit status is the number of failed criteria.

#include "bordersub/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace bordersub;

int main() {
  const std::vector<std::pair<const char*, std::function<std::vector<Check>()>>> criteria{
      {"formula reproductions, n=1..5", [] { return formula_checks(5); }},
      {"stabilizer dimensions, n=1..5", [] { return stabilizer_checks(5); }},
      {"cone stabilizer, n=2..5", [] { return cone_stabilizer_checks(5); }},
      {"orbit-cone tangent dimension, n=2..4", [] { return tangent_checks(4); }},
      {"degeneration certificates, n=1..6", [] { return degeneration_checks(6); }},
      {"size-13 component outside the permuted W family", [] { return size13_component_checks(); }},
      {"size-12 component and non-equidimensional enumeration", [] { return size12_component_checks(true); }},
      {"LP / invariant monomial duality", [] { return duality_checks(3, 300); }},
      {"tightness", [] { return tightness_checks(6, 200); }},
      {"unit-orbit tests", [] { return unit_orbit_checks(6, 50); }},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string error;
    try {
      checks = criteria[c].second();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && !checks.empty();
    for (const auto& check : checks) pass = pass && check.pass;
    std::printf("criterion %2zu: %s  %s  (%zu checks, %.1fs)\n", c + 1, pass ? "PASS" : "FAIL", criteria[c].first,
                checks.size(), seconds);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& check : checks) {
      if (!check.pass) std::printf("    failed: %s: %s\n", check.name.c_str(), check.detail.c_str());
    }
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed;
}
