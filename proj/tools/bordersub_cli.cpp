// Command-line front end. Every subcommand builds a RunReport and prints it
// as JSON (default) or as a short table.
//
// Exit status: 0 success or positive verdict, 1 negative verdict (refuted,
// infeasible, non-member, not tight), 2 usage or input error, 3 internal
// invariant violation.

#include "bordersub/monomials.hpp"
#include "bordersub/nullcone.hpp"
#include "bordersub/orbit.hpp"
#include "bordersub/report.hpp"
#include "bordersub/stabilizer.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace bordersub;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3;

const char* kOrbitNote =
    "Orbit membership is equivalent to maximal subrank. Maximal border subrank does NOT imply orbit "
    "membership: unit + w with generic w in W has border subrank n but is typically non_member.";

struct Outcome {
  RunReport report;
  int code = kOk;
};

RunReport make_report(const std::string& command) {
  RunReport r;
  r.command = command;
  return r;
}

Support support_kind(int n, const std::string& kind) {
  if (kind == "U") return build_tight_u(n);
  if (kind == "diagonal") return diagonal_support(n);
  if (kind == "full") return Support(n, all_triples(n));
  if (kind == "tight") return diagonal_support(n).union_with(build_tight_u(n));
  return build_w(n, parse_w_variant(kind));
}

Json tangent_attempts(const TangentResult& r) {
  Json out = Json::array();
  for (const auto& a : r.attempts) out.push_back({{"seed", a.seed}, {"value", a.dim}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact border-subrank maximality certificates for n x n x n tensors over Q.\n" +
               std::string(kOrbitNote)};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::function<Outcome()> handler;
  int n = 0;
  std::uint64_t seed = 0;
  std::string support_file, tensor_file, monomial_file, certificate_file, witness_file, kind = "W";

  auto need_n = [&](CLI::App* cmd) { cmd->add_option("--n", n, "Format n")->required()->check(CLI::Range(1, 64)); };
  auto need_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "Random seed")->required(); };
  auto need_file = [&](CLI::App* cmd, const char* flag, std::string& target, const char* what) {
    cmd->add_option(flag, target, what)->required()->check(CLI::ExistingFile);
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate supports, tensors and cocharacters");
  gen->require_subcommand(1);
  auto* gen_support = gen->add_subcommand("support", "Named support");
  need_n(gen_support);
  gen_support->add_option("--kind", kind, "W, W', W'', U, tight (diagonal + U), diagonal or full");
  gen_support->callback([&] {
    handler = [&] {
      auto r = make_report("gen support");
      r.inputs = {{"n", n}, {"kind", kind}};
      r.outputs["support"] = to_json(support_kind(n, kind));
      return Outcome{r};
    };
  });
  bool plus_unit = false;
  auto* gen_tensor = gen->add_subcommand("tensor", "Random coefficients in {+-1,+-2,+-3} on a support");
  need_file(gen_tensor, "--support", support_file, "Support JSON");
  need_seed(gen_tensor);
  gen_tensor->add_flag("--plus-unit", plus_unit, "Add the unit tensor");
  gen_tensor->callback([&] {
    handler = [&] {
      auto r = make_report("gen tensor");
      const auto s = support_from_json(read_json_file(support_file));
      r.inputs = {{"support", to_json(s)}, {"seed", seed}, {"plus_unit", plus_unit}};
      auto t = random_tensor_on(s, seed);
      if (plus_unit) t += unit_tensor(s.n());
      r.outputs["tensor"] = to_json(t);
      return Outcome{r};
    };
  });
  auto* gen_unit = gen->add_subcommand("unit", "Unit tensor");
  need_n(gen_unit);
  gen_unit->callback([&] {
    handler = [&] {
      auto r = make_report("gen unit");
      r.inputs = {{"n", n}};
      r.outputs["tensor"] = to_json(unit_tensor(n));
      return Outcome{r};
    };
  });
  auto* gen_cochar = gen->add_subcommand("cocharacter", "lambda_k = 2^n - 2^(n-k+1), mu_k = nu_k = 2^(n-k) - 2^(n-1)");
  need_n(gen_cochar);
  gen_cochar->callback([&] {
    handler = [&] {
      auto r = make_report("gen cocharacter");
      r.inputs = {{"n", n}};
      r.outputs["certificate"] = to_json(power_of_two_cocharacter(n));
      return Outcome{r};
    };
  });

  // nullcone
  auto* nullcone = app.add_subcommand("nullcone", "Torus nullcone membership of coordinate subspaces");
  nullcone->require_subcommand(1);
  auto* nc_check = nullcone->add_subcommand("check", "Exact LP feasibility with an integer certificate");
  need_file(nc_check, "--support", support_file, "Support JSON");
  nc_check->callback([&] {
    handler = [&] {
      auto r = make_report("nullcone check");
      const auto s = support_from_json(read_json_file(support_file));
      r.inputs = {{"support", to_json(s)}};
      const auto outcome = nullcone_feasible(s);
      r.outputs["feasible"] = outcome.feasible;
      if (outcome.certificate) r.outputs["certificate"] = to_json(*outcome.certificate);
      return Outcome{r, outcome.feasible ? kOk : kNegative};
    };
  });
  auto* nc_max = nullcone->add_subcommand("maximal", "Whether no triple can be added");
  need_file(nc_max, "--support", support_file, "Support JSON");
  nc_max->callback([&] {
    handler = [&] {
      auto r = make_report("nullcone maximal");
      const auto s = support_from_json(read_json_file(support_file));
      r.inputs = {{"support", to_json(s)}};
      const auto m = is_maximal_nullcone_support(s);
      r.outputs["maximal"] = m.maximal;
      Json ext = Json::array();
      for (const auto& t : m.extendable) ext.push_back(to_json(t));
      r.outputs["extendable"] = ext;
      return Outcome{r, m.maximal ? kOk : kNegative};
    };
  });
  bool best_effort = false;
  std::uint64_t max_lp_calls = 0;
  auto* nc_comp = nullcone->add_subcommand("components", "All maximal nullcone supports (complete for n <= 3)");
  need_n(nc_comp);
  nc_comp->add_flag("--best-effort", best_effort, "Allow n above the completeness cap");
  nc_comp->add_option("--max-lp-calls", max_lp_calls, "LP budget, 0 for none");
  nc_comp->callback([&] {
    handler = [&] {
      auto r = make_report("nullcone components");
      r.inputs = {{"n", n}, {"best_effort", best_effort}, {"max_lp_calls", max_lp_calls}};
      EnumerationOptions opts;
      opts.best_effort = best_effort;
      opts.max_lp_calls = max_lp_calls;
      const auto list = enumerate_maximal_components(n, opts);
      Json comps = Json::array();
      for (const auto& c : list.components) comps.push_back(to_json(c));
      r.outputs = {{"components", comps}, {"complete", list.complete}, {"count", list.components.size()},
                   {"chambers", list.chambers}, {"lp_calls", list.lp_calls},
                   {"label", list.complete ? "tool output, complete" : "tool output, best effort"}};
      return Outcome{r};
    };
  });

  // invariants
  auto* inv = app.add_subcommand("invariants", "Torus-invariant monomials");
  inv->require_subcommand(1);
  auto* inv_list = inv->add_subcommand("list", "The generator family");
  need_n(inv_list);
  inv_list->callback([&] {
    handler = [&] {
      auto r = make_report("invariants list");
      r.inputs = {{"n", n}};
      Json ms = Json::array();
      for (const auto& m : generator_family(n)) ms.push_back(to_string(m));
      r.outputs = {{"monomials", ms}, {"count", ms.size()}};
      return Outcome{r};
    };
  });
  auto* inv_check = inv->add_subcommand("check", "Whether a monomial is torus invariant");
  need_file(inv_check, "--monomial", monomial_file, "Monomial JSON");
  inv_check->callback([&] {
    handler = [&] {
      auto r = make_report("invariants check");
      const auto m = monomial_from_json(read_json_file(monomial_file));
      r.inputs = {{"monomial", to_json(m)}};
      const bool ok = is_torus_invariant(m);
      r.outputs = {{"invariant", ok}, {"monomial", to_string(m)}};
      return Outcome{r, ok ? kOk : kNegative};
    };
  });
  int max_degree = 0;
  auto* inv_within = inv->add_subcommand("within", "Invariant monomials supported on S");
  need_file(inv_within, "--support", support_file, "Support JSON");
  inv_within->add_option("--max-degree", max_degree, "Degree bound, default 3n")->check(CLI::Range(1, 64));
  inv_within->callback([&] {
    handler = [&] {
      auto r = make_report("invariants within");
      const auto s = support_from_json(read_json_file(support_file));
      const int d = max_degree > 0 ? max_degree : duality_degree_cap(s.n());
      r.inputs = {{"support", to_json(s)}, {"max_degree", d}};
      Json ms = Json::array();
      for (const auto& m : invariant_monomials_within(s, d)) ms.push_back(to_json(m));
      r.outputs = {{"monomials", ms}, {"count", ms.size()}};
      return Outcome{r};
    };
  });

  // stabilizers and dimensions
  auto* stab = app.add_subcommand("stab", "Stabilizer Lie algebra of a tensor");
  stab->require_subcommand(1);
  auto* stab_dim = stab->add_subcommand("dim", "dim of {(x,y,z) : (x,y,z).T = 0}");
  need_file(stab_dim, "--tensor", tensor_file, "Tensor JSON");
  stab_dim->callback([&] {
    handler = [&] {
      auto r = make_report("stab dim");
      const auto t = tensor_from_json(read_json_file(tensor_file));
      r.inputs = {{"tensor", to_json(t)}};
      const auto d = stabilizer_dim(t);
      r.outputs = {{"value", d}, {"convention", "gl3"}, {"quotient_value", d - 2}, {"attempts", Json::array()}};
      return Outcome{r};
    };
  });
  bool structure = false;
  std::string convention = "quotient";
  auto* cone = app.add_subcommand("cone-stab", "Stabilizer of the cone over <M, W>");
  need_n(cone);
  cone->add_flag("--structure", structure, "Also return the kernel basis triangularity report");
  cone->add_option("--convention", convention, "Dimension convention")->check(CLI::IsMember({"gl3", "quotient"}));
  cone->callback([&] {
    handler = [&] {
      auto r = make_report("cone-stab");
      r.inputs = {{"n", n}, {"structure", structure}, {"convention", convention}};
      const auto conv = convention == "gl3" ? Convention::Gl3 : Convention::Quotient;
      r.outputs = {{"value", cone_stabilizer_dim(n, conv)}, {"convention", convention}, {"attempts", Json::array()}};
      if (structure) {
        const auto s = cone_stabilizer_structure(n);
        r.outputs["structure"] = {{"dim_gl3", s.dim_gl3},
                                  {"expected_shape_dim", s.expected_shape_dim},
                                  {"triangular", s.triangular},
                                  {"equal_diagonal_sums", s.equal_diagonal_sums},
                                  {"violations", s.violations}};
        r.checks.push_back({"structure", s.ok(), ""});
        return Outcome{r, s.ok() ? kOk : kNegative};
      }
      return Outcome{r};
    };
  });
  auto* orbit_dim = app.add_subcommand("orbit-dim", "Projective dimension of the tangent space to GL^3 . Cone(M, P(W))");
  need_n(orbit_dim);
  need_seed(orbit_dim);
  orbit_dim->callback([&] {
    handler = [&] {
      auto r = make_report("orbit-dim");
      r.inputs = {{"n", n}, {"seed", seed}};
      const auto t = orbit_cone_tangent_dim(n, seed);
      const auto bound = main_theorem_bound(n);
      r.outputs = {{"value", t.value}, {"convention", "projective"}, {"attempts", tangent_attempts(t)},
                   {"bound", bound}};
      r.checks.push_back({"reaches bound", t.value == bound, ""});
      return Outcome{r};
    };
  });
  auto* bound = app.add_subcommand("bound", "(2n^3 + 3n^2 - 2n - 3) / 3");
  need_n(bound);
  bound->callback([&] {
    handler = [&] {
      auto r = make_report("bound");
      r.inputs = {{"n", n}};
      r.outputs = {{"value", main_theorem_bound(n)}, {"convention", "projective"}, {"attempts", Json::array()}};
      return Outcome{r};
    };
  });

  // certificates and verdicts
  auto* certify = app.add_subcommand("certify", "Degeneration certificate for unit-like tensors M + w");
  need_file(certify, "--tensor", tensor_file, "Tensor JSON");
  certify->add_option("--certificate", certificate_file, "Validate this cocharacter instead of searching")
      ->check(CLI::ExistingFile);
  certify->callback([&] {
    handler = [&] {
      const auto t = tensor_from_json(read_json_file(tensor_file));
      auto r = certificate_file.empty()
                   ? cmd_certify(t)
                   : cmd_certify(t, torus_weight_from_json(read_json_file(certificate_file)));
      return Outcome{r, r.outputs.value("status", "") == "certified" ? kOk : kNegative};
    };
  });
  auto* unit_orbit = app.add_subcommand("unit-orbit", std::string("GL^3-orbit membership of the unit tensor. ") + kOrbitNote);
  need_file(unit_orbit, "--tensor", tensor_file, "Tensor JSON");
  need_seed(unit_orbit);
  unit_orbit->callback([&] {
    handler = [&] {
      auto r = make_report("unit-orbit");
      const auto t = tensor_from_json(read_json_file(tensor_file));
      r.inputs = {{"tensor", to_json(t)}, {"seed", seed}};
      const auto res = unit_orbit_member(t, seed);
      r.outputs = {{"verdict", to_string(res.verdict)}, {"witness", res.witness}};
      return Outcome{r, res.verdict == OrbitVerdict::NonMember ? kNegative : kOk};
    };
  });
  auto* tight = app.add_subcommand("tight", "Tight supports");
  tight->require_subcommand(1);
  auto* tight_check = tight->add_subcommand("check", "Decide tightness and give a witness");
  need_file(tight_check, "--support", support_file, "Support JSON");
  tight_check->callback([&] {
    handler = [&] {
      auto r = make_report("tight check");
      const auto s = support_from_json(read_json_file(support_file));
      r.inputs = {{"support", to_json(s)}};
      const auto w = find_tight_witness(s);
      r.outputs["tight"] = w.has_value();
      if (w) r.outputs["witness"] = to_json(*w);
      return Outcome{r, w ? kOk : kNegative};
    };
  });
  auto* tight_verify = tight->add_subcommand("verify", "Check a given witness");
  need_file(tight_verify, "--support", support_file, "Support JSON");
  need_file(tight_verify, "--witness", witness_file, "Witness JSON");
  tight_verify->callback([&] {
    handler = [&] {
      auto r = make_report("tight verify");
      const auto s = support_from_json(read_json_file(support_file));
      const auto w = tight_witness_from_json(read_json_file(witness_file));
      r.inputs = {{"support", to_json(s)}, {"witness", to_json(w)}};
      const bool ok = check_tight_witness(s, w);
      r.outputs["valid"] = ok;
      return Outcome{r, ok ? kOk : kNegative};
    };
  });
  int n_max = 3;
  auto* reproduce = app.add_subcommand("reproduce", "Run every acceptance check for n = 1..n_max");
  reproduce->add_option("--n-max", n_max, "Largest n (1..5)")->check(CLI::Range(1, 5));
  reproduce->callback([&] {
    handler = [&] {
      auto r = cmd_reproduce(n_max);
      return Outcome{r, r.all_pass() ? kOk : kNegative};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto outcome = handler();
    if (format == "table") {
      std::cout << outcome.report.to_table();
    } else {
      std::cout << outcome.report.to_json().dump(2) << "\n";
    }
    return outcome.code;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
