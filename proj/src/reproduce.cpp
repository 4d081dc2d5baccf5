#include "bordersub/monomials.hpp"
#include "bordersub/nullcone.hpp"
#include "bordersub/oracles.hpp"
#include "bordersub/orbit.hpp"
#include "bordersub/report.hpp"
#include "bordersub/stabilizer.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace bordersub {
namespace {

template <typename A, typename B>
Check same(std::string name, const A& got, const B& expected) {
  std::ostringstream detail;
  detail << "got " << got << ", expected " << expected;
  return {std::move(name), got == expected, detail.str()};
}

Check holds(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

std::string at_n(const std::string& what, int n) { return what + " n=" + std::to_string(n); }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

Support random_support(int n, int min_size, int max_size, std::mt19937_64& rng, bool off_diagonal = false) {
  auto pool = off_diagonal ? off_diagonal_triples(n) : all_triples(n);
  const auto size = static_cast<std::size_t>(min_size + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - min_size + 1)));
  // Partial Fisher-Yates with an explicit index draw, portable across standard libraries.
  for (std::size_t a = 0; a < size; ++a) {
    const std::size_t b = a + static_cast<std::size_t>(rng() % (pool.size() - a));
    std::swap(pool[a], pool[b]);
  }
  pool.resize(size);
  return Support(n, pool);
}

std::vector<Support> all_subsets(int n, std::size_t max_size) {
  const auto pool = all_triples(n);
  std::vector<Support> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<Triple> chosen;
    for (std::size_t b = 0; b < pool.size(); ++b) {
      if (mask >> b & 1) chosen.push_back(pool[b]);
    }
    if (chosen.size() <= max_size) out.emplace_back(n, chosen);
  }
  return out;
}

std::vector<Support> permuted_w_family(int n) {
  std::vector<Support> out;
  for (auto variant : {WVariant::W, WVariant::WPrime, WVariant::WDoublePrime}) {
    for (const auto& s : all_permutations(n)) out.push_back(apply_permutation(s, build_w(n, variant)));
  }
  return out;
}

MatrixQ random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    MatrixQ g(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c) g(r, c) = static_cast<int>(rng() % 5) - 2;
    if (rank(g) == n) return g;
  }
}

Tensor3 w_state() {
  Tensor3 t(2);
  t.set({1, 1, 2}, 1);
  t.set({1, 2, 1}, 1);
  t.set({2, 1, 1}, 1);
  return t;
}

}  // namespace

TorusWeight size13_component_weights() { return TorusWeight({5, 0, 2}, {0, 1, -3}, {-5, -1, 1}); }

TorusWeight size12_component_weights() { return TorusWeight({-2, -1, 0}, {3, -2, 0}, {-1, 3, 0}); }

std::vector<Check> formula_checks(int n_max) {
  static const std::int64_t kBound[] = {0, 7, 24, 55, 104};
  std::vector<Check> out;
  for (int n = 1; n <= n_max; ++n) {
    const std::int64_t cube = static_cast<std::int64_t>(n) * n * n;
    const std::int64_t closed = cube - static_cast<std::int64_t>(n) * (n + 1) * (2 * n + 1) / 6;
    out.push_back(same(at_n("w_dimension", n), w_dimension(n), closed));
    for (auto v : {WVariant::W, WVariant::WPrime, WVariant::WDoublePrime}) {
      const auto size = static_cast<std::int64_t>(build_w(n, v).size());
      out.push_back(same(at_n("|" + to_string(v) + "|", n), size, (4 * cube - 3 * n * n - n) / 6));
      out.push_back(same(at_n("|" + to_string(v) + "| by enumeration", n), size, count_w_by_enumeration(n, v)));
    }
    const auto family = generator_family(n);
    out.push_back(same(at_n("generator count", n), static_cast<std::int64_t>(family.size()),
                        n + 3 * binomial(n, 2) + 2 * binomial(n, 3)));
    out.push_back(holds(at_n("generators invariant", n),
                        std::all_of(family.begin(), family.end(), [](const Monomial& m) { return is_torus_invariant(m); })));
    const Rational exact = Rational(2 * cube + 3 * n * n - 2 * n - 3) / 3;
    out.push_back(holds(at_n("bound numerator divisible by 3", n), is_integer(exact)));
    out.push_back(same(at_n("main_theorem_bound", n), main_theorem_bound(n), to_int64(exact)));
    if (n <= 5) out.push_back(same(at_n("main_theorem_bound table", n), main_theorem_bound(n), kBound[n - 1]));
  }
  return out;
}

std::vector<Check> stabilizer_checks(int n_max) {
  std::vector<Check> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto stab = stabilizer_dim(unit_tensor(n));
    out.push_back(same(at_n("stabilizer_dim(unit), gl3", n), stab, 2 * n));
    out.push_back(same(at_n("stabilizer_dim(unit), quotient", n), stab - 2, 2 * n - 2));
    const auto orbit = orbit_dim_unit(n);
    out.push_back(same(at_n("orbit_dim_unit", n), orbit, 3 * n * n - 2 * n));
    out.push_back(same(at_n("rank + nullity", n), orbit + stab, 3 * n * n));
  }
  return out;
}

std::vector<Check> cone_stabilizer_checks(int n_max) {
  std::vector<Check> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto s = cone_stabilizer_structure(n);
    const std::int64_t expected = (3 * n * n + n - 2) / 2;
    out.push_back(same(at_n("cone_stabilizer_dim, quotient", n), cone_stabilizer_dim(n), expected));
    out.push_back(same(at_n("cone stabilizer, gl3", n), s.dim_gl3, expected + 2));
    std::string detail;
    for (const auto& v : s.violations) detail += (detail.empty() ? "" : "; ") + v;
    out.push_back(holds(at_n("cone stabilizer basis triangular", n), s.triangular, detail));
    out.push_back(holds(at_n("cone stabilizer equal diagonal sums", n), s.equal_diagonal_sums, detail));
    out.push_back(same(at_n("cone stabilizer fills the triangular shape", n), s.dim_gl3, s.expected_shape_dim));
  }
  return out;
}

std::vector<Check> tangent_checks(int n_max, std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = 2; n <= std::min(n_max, 4); ++n) {
    const auto r = orbit_cone_tangent_dim(n, seed);
    std::string attempts;
    for (const auto& a : r.attempts) {
      attempts += (attempts.empty() ? "" : ", ") + std::string("seed ") + std::to_string(a.seed) + " -> " +
                  std::to_string(a.dim);
    }
    auto c = same(at_n("orbit_cone_tangent_dim", n), r.value, main_theorem_bound(n));
    c.detail += " [" + attempts + "]";
    out.push_back(c);
    const std::int64_t count = (3 * n * n - 2) - cone_stabilizer_dim(n) + w_dimension(n);
    out.push_back(same(at_n("dim G - dim G_C' + dim C'", n), r.value, count));
  }
  return out;
}

std::vector<Check> degeneration_checks(int n_max) {
  std::vector<Check> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto tw = power_of_two_cocharacter(n);
    bool identity = true;
    std::string first_bad;
    for (const auto& t : all_triples(n)) {
      const auto closed = pow2(n - t.j) + pow2(n - t.k) - pow2(n - t.i + 1);
      if (weight_of(tw, t) != closed && identity) {
        identity = false;
        first_bad = to_string(t);
      }
    }
    out.push_back(holds(at_n("weight closed form", n), identity, first_bad));
    const auto w = build_w(n);
    out.push_back(holds(at_n("W inside positive support", n), w.is_subset_of(positive_support(tw))));
    const auto t = unit_tensor(n) + random_tensor_on(w, 500 + static_cast<std::uint64_t>(n));
    const auto verdict = check_degeneration_certificate(t, tw);
    out.push_back(holds(at_n("unit + W certified", n), verdict.valid, verdict.reason));
    out.push_back(holds(at_n("W feasible by LP", n), nullcone_feasible(w).feasible));
  }
  return out;
}

std::vector<Check> size13_component_checks() {
  std::vector<Check> out;
  const auto s = positive_support(size13_component_weights());
  out.push_back(same("size-13 component: |U|", s.size(), std::size_t{13}));
  out.push_back(holds("size-13 component: feasible", nullcone_feasible(s).feasible));
  const auto m = is_maximal_nullcone_support(s);
  out.push_back(holds("size-13 component: maximal", m.maximal));
  const auto family = permuted_w_family(3);
  out.push_back(same("permuted W family: distinct members", std::set<Support>(family.begin(), family.end()).size(),
                      std::size_t{18}));
  out.push_back(holds("size-13 component: not a permuted W, W', W''",
                      std::find(family.begin(), family.end(), s) == family.end()));
  return out;
}

std::vector<Check> size12_component_checks(bool enumerate) {
  std::vector<Check> out;
  const auto small = positive_support(size12_component_weights());
  out.push_back(same("size-12 component: |U|", small.size(), std::size_t{12}));
  out.push_back(holds("size-12 component: feasible", nullcone_feasible(small).feasible));
  out.push_back(holds("size-12 component: maximal", is_maximal_nullcone_support(small).maximal));
  const std::vector<Monomial> obstructions{Monomial(3, {{1, 2, 3}, {2, 1, 1}, {3, 3, 2}}),
                                           Monomial(3, {{2, 3, 1}, {3, 2, 2}, {1, 1, 3}}),
                                           Monomial(3, {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}})};
  for (const auto& m : obstructions) out.push_back(holds("invariant " + to_string(m), is_torus_invariant(m)));
  if (!enumerate) return out;

  const auto list = enumerate_maximal_components(3);
  const std::set<Support> found(list.components.begin(), list.components.end());
  out.push_back(holds("enumeration complete", list.complete,
                      std::to_string(list.components.size()) + " components, " + std::to_string(list.chambers) +
                          " chambers, " + std::to_string(list.lp_calls) + " LP calls"));
  std::set<std::size_t> sizes;
  for (const auto& c : list.components) sizes.insert(c.size());
  out.push_back(holds("component sizes include 13 and 12", sizes.count(13) && sizes.count(12)));
  const auto family = permuted_w_family(3);
  out.push_back(holds("all permuted W, W', W'' found",
                      std::all_of(family.begin(), family.end(), [&](const Support& s) { return found.count(s) > 0; })));
  out.push_back(holds("size-13 component found", found.count(positive_support(size13_component_weights())) > 0));
  out.push_back(holds("size-12 component found", found.count(small) > 0));
  bool closed = true;
  for (const auto& c : list.components) {
    for (const auto& s : all_permutations(3)) closed = closed && found.count(apply_permutation(s, c)) > 0;
  }
  out.push_back(holds("components closed under permutations", closed));
  bool all_maximal = true;
  for (const auto& c : list.components) all_maximal = all_maximal && is_maximal_nullcone_support(c).maximal;
  out.push_back(holds("every component maximal", all_maximal));
  return out;
}

std::vector<Check> duality_checks(int n_max, int n3_samples, std::uint64_t seed) {
  std::vector<Check> out;
  auto agree = [](const Support& s) {
    const bool infeasible = !nullcone_feasible(s).feasible;
    return infeasible == find_invariant_monomial_within(s, duality_degree_cap(s.n())).has_value();
  };
  if (n_max >= 2) {
    const auto subsets = all_subsets(2, 6);
    std::size_t bad = 0;
    for (const auto& s : subsets) bad += agree(s) ? 0 : 1;
    out.push_back(same("duality on all n=2 supports of size <= 6 (" + std::to_string(subsets.size()) +
                            "), disagreements",
                        bad, std::size_t{0}));
  }
  if (n_max >= 3 && n3_samples > 0) {
    std::mt19937_64 rng(seed);
    std::size_t bad = 0, infeasible = 0;
    std::string first;
    for (int c = 0; c < n3_samples; ++c) {
      // Every other sample avoids the diagonal, which would decide the case outright.
      const auto s = random_support(3, 1, c % 2 == 1 ? 12 : 16, rng, c % 2 == 1);
      infeasible += nullcone_feasible(s).feasible ? 0 : 1;
      if (!agree(s)) {
        if (bad++ == 0) first = to_json(s).dump();
      }
    }
    auto check = same("duality on " + std::to_string(n3_samples) + " random n=3 supports, disagreements", bad,
                       std::size_t{0});
    check.detail += "; " + std::to_string(infeasible) + " infeasible" + (first.empty() ? "" : "; first " + first);
    out.push_back(check);
  }
  return out;
}

std::vector<Check> tightness_checks(int n_max, int n3_samples, std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto s = diagonal_support(n).union_with(build_tight_u(n));
    out.push_back(holds(at_n("progression witness", n), check_tight_witness(s, arithmetic_progression_witness(n))));
    out.push_back(holds(at_n("find_tight_witness on 2i=j+k", n), find_tight_witness(s).has_value()));
    if (n <= 5) {
      const auto t = unit_tensor(n) + random_tensor_on(build_tight_u(n), 900 + static_cast<std::uint64_t>(n));
      const auto verdict = check_degeneration_certificate(t, power_of_two_cocharacter(n));
      out.push_back(holds(at_n("2i=j+k tensor also degeneration-certified", n),
                          build_tight_u(n).is_subset_of(build_w(n)) && verdict.valid, verdict.reason));
    }
  }
  out.push_back(holds("forced collision {(1,1,1),(1,1,2)} not tight",
                      !find_tight_witness(Support(2, {{1, 1, 1}, {1, 1, 2}})).has_value()));
  if (n_max >= 3) {
    out.push_back(holds("W(3) + diagonal not tight", !find_tight_witness(build_w(3).union_with(diagonal_support(3)))));
  }
  auto compare = [](const Support& s) {
    return find_tight_witness(s).has_value() == tight_by_exhaustive_search(s).has_value();
  };
  if (n_max >= 2) {
    const auto subsets = all_subsets(2, 8);
    std::size_t bad = 0, tight = 0;
    for (const auto& s : subsets) {
      bad += compare(s) ? 0 : 1;
      tight += find_tight_witness(s) ? 1 : 0;
    }
    auto c = same("tightness vs exhaustive oracle, all 256 n=2 supports, disagreements", bad, std::size_t{0});
    c.detail += "; " + std::to_string(tight) + " tight";
    out.push_back(c);
  }
  if (n_max >= 3 && n3_samples > 0) {
    std::mt19937_64 rng(seed);
    std::size_t bad = 0, tight = 0;
    for (int c = 0; c < n3_samples; ++c) {
      const auto s = random_support(3, 1, 10, rng);
      bad += compare(s) ? 0 : 1;
      tight += find_tight_witness(s) ? 1 : 0;
    }
    auto c = same("tightness vs exhaustive oracle, " + std::to_string(n3_samples) + " random n=3 supports, disagreements",
                   bad, std::size_t{0});
    c.detail += "; " + std::to_string(tight) + " tight";
    out.push_back(c);
  }
  return out;
}

std::vector<Check> unit_orbit_checks(int n_max, int gl_cases, std::uint64_t seed) {
  std::vector<Check> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(same(at_n("unit tensor verdict", n), to_string(unit_orbit_member(unit_tensor(n), seed).verdict),
                        std::string("member")));
  }
  if (n_max >= 2) {
    out.push_back(same("W-state verdict", to_string(unit_orbit_member(w_state(), seed).verdict),
                        std::string("non_member")));
    auto rank_two = unit_tensor(2);
    rank_two.set({2, 1, 2}, 1);
    out.push_back(same("unit(2) + a2 b1 c2 verdict", to_string(unit_orbit_member(rank_two, seed).verdict),
                        std::string("member")));
  }
  if (n_max >= 3 && gl_cases > 0) {
    std::size_t bad = 0, members = 0, others = 0, skipped = 0;
    for (int c = 0; c < gl_cases; ++c) {
      std::mt19937_64 rng(seed * 1000 + static_cast<std::uint64_t>(c));
      Tensor3 t(3);
      switch (c % 3) {
        case 0:
          t = transform(random_invertible(3, rng), random_invertible(3, rng), random_invertible(3, rng), unit_tensor(3));
          break;
        case 1: t = unit_tensor(3) + random_tensor_on(random_support(3, 1, 6, rng), rng()); break;
        default: t = random_tensor_on(random_support(3, 3, 12, rng), rng()); break;
      }
      const auto g = transform(random_invertible(3, rng), random_invertible(3, rng), random_invertible(3, rng), t);
      const auto before = unit_orbit_member(t, seed).verdict;
      const auto after = unit_orbit_member(g, seed).verdict;
      if (before == OrbitVerdict::Inconclusive || after == OrbitVerdict::Inconclusive) {
        ++skipped;
        continue;
      }
      bad += before == after ? 0 : 1;
      (before == OrbitVerdict::Member ? members : others) += 1;
    }
    auto check = same("GL-invariance on " + std::to_string(gl_cases) + " n=3 cases, disagreements", bad, std::size_t{0});
    check.detail += "; " + std::to_string(members) + " member, " + std::to_string(others) + " non_member, " +
                    std::to_string(skipped) + " inconclusive";
    out.push_back(check);
  }
  return out;
}

RunReport cmd_reproduce(int n_max) {
  if (n_max < 1 || n_max > 5) throw std::out_of_range("n_max must lie in 1..5");
  RunReport report;
  report.command = "reproduce";
  report.inputs["n_max"] = n_max;
  const bool n3 = n_max >= 3;
  const std::vector<std::vector<Check>> criteria{
      formula_checks(n_max),
      stabilizer_checks(n_max),
      cone_stabilizer_checks(n_max),
      tangent_checks(n_max),
      degeneration_checks(n_max),
      size13_component_checks(),
      size12_component_checks(n3),
      duality_checks(n_max, n3 ? 300 : 0),
      tightness_checks(n_max, n3 ? 200 : 0),
      unit_orbit_checks(n_max, n3 ? 50 : 0),
  };
  Json summary = Json::array();
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    bool pass = true;
    for (const auto& check : criteria[c]) {
      pass = pass && check.pass;
      report.checks.push_back(check);
    }
    summary.push_back({{"criterion", c + 1}, {"pass", pass}, {"checks", criteria[c].size()}});
  }
  report.outputs["criteria"] = summary;
  report.outputs["all_pass"] = report.all_pass();
  return report;
}

}  // namespace bordersub
