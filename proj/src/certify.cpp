#include "bordersub/monomials.hpp"
#include "bordersub/nullcone.hpp"
#include "bordersub/report.hpp"

#include <sstream>

namespace bordersub {
namespace {

std::vector<int> missing_diagonal(const Tensor3& t) {
  std::vector<int> out;
  for (int i = 1; i <= t.n(); ++i) {
    if (t.at({i, i, i}) == 0) out.push_back(i);
  }
  return out;
}

Support off_diagonal(const Tensor3& t) {
  std::vector<Triple> triples;
  for (const auto& [x, v] : t.entries()) {
    if (!x.diagonal()) triples.push_back(x);
  }
  return Support(t.n(), std::move(triples));
}

RunReport inapplicable(RunReport report, const std::vector<int>& missing) {
  report.outputs["status"] = "inapplicable";
  report.outputs["reason"] = "not of the form M + w with full diagonal; certificate method inapplicable";
  report.outputs["missing_diagonal"] = missing;
  return report;
}

void record_verdict(RunReport& report, const Tensor3& t, const TorusWeight& tw) {
  const auto verdict = check_degeneration_certificate(t, tw);
  report.checks.push_back({"certificate validates", verdict.valid, verdict.reason});
  if (verdict.valid) {
    report.outputs["status"] = "certified";
    report.outputs["certificate"] = to_json(tw);
  } else {
    report.outputs["status"] = "refused";
    report.outputs["reason"] = verdict.reason;
  }
}

RunReport start(const Tensor3& t) {
  RunReport report;
  report.command = "certify";
  report.inputs["tensor"] = to_json(t);
  return report;
}

}  // namespace

bool RunReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Json RunReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"checks", cs}};
}

std::string RunReport::to_table() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, value] : outputs.items()) {
    if (value.is_array() && !value.empty()) {
      out << "  " << key << ":\n";
      for (const auto& item : value) out << "    " << scalar(item) << "\n";
    } else {
      out << "  " << key << ": " << scalar(value) << "\n";
    }
  }
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

RunReport cmd_certify(const Tensor3& t) {
  RunReport report = start(t);
  if (auto missing = missing_diagonal(t); !missing.empty()) return inapplicable(std::move(report), missing);
  const Support rest = off_diagonal(t);
  report.outputs["off_diagonal_support"] = to_json(rest);
  const auto outcome = nullcone_feasible(rest);
  if (!outcome.feasible) {
    report.outputs["status"] = "refused";
    report.outputs["reason"] = "off-diagonal support is not in the torus nullcone (LP infeasible)";
    if (auto m = find_invariant_monomial_within(rest, duality_degree_cap(t.n()))) {
      report.outputs["obstruction"] = to_json(*m);
    }
    return report;
  }
  record_verdict(report, t, *outcome.certificate);
  return report;
}

RunReport cmd_certify(const Tensor3& t, const TorusWeight& certificate) {
  RunReport report = start(t);
  report.inputs["certificate"] = to_json(certificate);
  if (certificate.n() != t.n()) throw DimensionMismatch("certificate and tensor differ in n");
  if (auto missing = missing_diagonal(t); !missing.empty()) return inapplicable(std::move(report), missing);
  record_verdict(report, t, certificate);
  return report;
}

}  // namespace bordersub
