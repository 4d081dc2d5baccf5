#include "bordersub/nullcone.hpp"

#include "bordersub/lp.hpp"
#include "bordersub/parallel.hpp"

#include <algorithm>

namespace bordersub {
namespace {

// Free variables lambda_2..lambda_n, mu_2..mu_n. The shift (lambda + a,
// mu + b, nu - a - b) leaves every weight unchanged, so lambda_1 = mu_1 = 0
// loses nothing; nu = -lambda - mu.
Index variable_count(int n) { return 2 * (n - 1); }

VectorQ weight_form(int n, const Triple& t) {
  VectorQ h = VectorQ::Zero(variable_count(n));
  auto lambda = [&](int p, int coeff) {
    if (p > 1) h[p - 2] += coeff;
  };
  auto mu = [&](int p, int coeff) {
    if (p > 1) h[n - 1 + p - 2] += coeff;
  };
  // lambda_i + mu_j + nu_k with nu_k = -lambda_k - mu_k
  lambda(t.i, 1);
  mu(t.j, 1);
  lambda(t.k, -1);
  mu(t.k, -1);
  return h;
}

std::optional<VectorQ> solve(int n, const std::vector<VectorQ>& forms) {
  const Index m = static_cast<Index>(forms.size());
  MatrixQ a(m, variable_count(n));
  for (Index r = 0; r < m; ++r) a.row(r) = forms[static_cast<std::size_t>(r)].transpose();
  return find_feasible_point<Rational>(a, VectorQ::Ones(m));
}

TorusWeight integer_certificate(int n, const VectorQ& x) {
  BigInt scale(1);
  for (Index v = 0; v < x.size(); ++v) scale = lcm(scale, BigInt(denominator(x[v])));
  std::vector<BigInt> lambda(static_cast<std::size_t>(n), 0), mu(static_cast<std::size_t>(n), 0);
  for (int p = 2; p <= n; ++p) {
    lambda[static_cast<std::size_t>(p - 1)] = BigInt(numerator(x[p - 2] * Rational(scale)));
    mu[static_cast<std::size_t>(p - 1)] = BigInt(numerator(x[n - 1 + p - 2] * Rational(scale)));
  }
  BigInt g(0);
  for (int p = 0; p < n; ++p) {
    g = gcd(g, lambda[static_cast<std::size_t>(p)]);
    g = gcd(g, mu[static_cast<std::size_t>(p)]);
  }
  std::vector<std::int64_t> l, m, nu;
  for (int p = 0; p < n; ++p) {
    BigInt lp = lambda[static_cast<std::size_t>(p)], mp = mu[static_cast<std::size_t>(p)];
    if (g > 1) {
      lp /= g;
      mp /= g;
    }
    l.push_back(to_int64(lp));
    m.push_back(to_int64(mp));
    nu.push_back(-l.back() - m.back());
  }
  return TorusWeight(std::move(l), std::move(m), std::move(nu));
}

class ChamberWalk {
 public:
  ChamberWalk(int n, const EnumerationOptions& options)
      : n_(n), options_(options), triples_(off_diagonal_triples(n)) {
    for (const auto& t : triples_) forms_.push_back(weight_form(n, t));
  }

  void run() {
    std::vector<VectorQ> active;
    std::vector<bool> positive;
    descend(0, VectorQ::Zero(variable_count(n_)), active, positive);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t lp_calls() const { return lp_calls_; }
  std::vector<Support>& positive_sets() { return positive_sets_; }

 private:
  void descend(std::size_t depth, const VectorQ& witness, std::vector<VectorQ>& active,
               std::vector<bool>& positive) {
    if (exhausted_) return;
    if (depth == triples_.size()) {
      std::vector<Triple> pos;
      for (std::size_t t = 0; t < triples_.size(); ++t) {
        if (positive[t]) pos.push_back(triples_[t]);
      }
      positive_sets_.emplace_back(n_, std::move(pos));
      return;
    }
    const Rational value = forms_[depth].dot(witness);
    for (const int sign : {+1, -1}) {
      VectorQ signed_form = forms_[depth] * Rational(sign);
      const Rational signed_value = value * sign;
      std::optional<VectorQ> child;
      if (signed_value > 0) {
        // Scaling up keeps every earlier constraint at >= 1.
        child = signed_value >= 1 ? witness : VectorQ(witness * (Rational(1) / signed_value));
      } else {
        if (options_.max_lp_calls != 0 && lp_calls_ >= options_.max_lp_calls) {
          exhausted_ = true;
          return;
        }
        active.push_back(signed_form);
        ++lp_calls_;
        child = solve(n_, active);
        active.pop_back();
      }
      if (!child) continue;
      active.push_back(std::move(signed_form));
      positive.push_back(sign > 0);
      descend(depth + 1, *child, active, positive);
      positive.pop_back();
      active.pop_back();
    }
  }

  int n_;
  EnumerationOptions options_;
  std::vector<Triple> triples_;
  std::vector<VectorQ> forms_;
  std::vector<Support> positive_sets_;
  std::uint64_t lp_calls_ = 0;
  bool exhausted_ = false;
};

}  // namespace

FeasibilityOutcome nullcone_feasible(const Support& s) {
  const int n = s.n();
  for (const auto& t : s) {
    if (t.diagonal()) return {};  // weight is identically zero
  }
  std::vector<VectorQ> forms;
  forms.reserve(s.size());
  for (const auto& t : s) forms.push_back(weight_form(n, t));
  const auto x = solve(n, forms);
  if (!x) return {};
  TorusWeight cert = integer_certificate(n, *x);
  for (const auto& t : s) {
    if (weight_of(cert, t) < 1) {
      throw InvariantViolation("certificate gives weight " + std::to_string(weight_of(cert, t)) + " on " +
                               to_string(t));
    }
  }
  return {true, std::move(cert)};
}

MaximalityReport is_maximal_nullcone_support(const Support& s) {
  const auto base = nullcone_feasible(s);
  if (!base.feasible) throw PreconditionViolation("support is not in the nullcone; maximality is undefined");
  MaximalityReport report;
  for (const auto& t : all_triples(s.n())) {
    if (s.contains(t) || t.diagonal()) continue;
    if (weight_of(*base.certificate, t) >= 1 || nullcone_feasible(s.with(t)).feasible) {
      report.extendable.push_back(t);
    }
  }
  report.maximal = report.extendable.empty();
  return report;
}

ComponentList enumerate_maximal_components(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > options.cap && !options.best_effort) {
    throw PreconditionViolation("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                std::to_string(options.cap) + "; pass best_effort to run anyway");
  }
  ChamberWalk walk(n, options);
  walk.run();
  auto& sets = walk.positive_sets();
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  ComponentList out;
  out.chambers = sets.size();
  out.lp_calls = walk.lp_calls();
  // Larger sets first so each candidate only needs comparing with bigger ones.
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sets[a].size() > sets[b].size(); });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto& candidate = sets[order[a]];
    bool dominated = false;
    for (std::size_t b = 0; b < a && !dominated; ++b) {
      const auto& bigger = sets[order[b]];
      dominated = bigger.size() > candidate.size() && candidate.is_subset_of(bigger);
    }
    if (!dominated) out.components.push_back(candidate);
  }
  std::sort(out.components.begin(), out.components.end());

  std::vector<char> verified(out.components.size(), 0);
  parallel_for(out.components.size(), [&](std::size_t i) {
    verified[i] = is_maximal_nullcone_support(out.components[i]).maximal ? 1 : 0;
  });
  for (std::size_t i = 0; i < verified.size(); ++i) {
    if (!verified[i] && !walk.exhausted()) {
      throw InvariantViolation("enumerated component is not maximal");
    }
  }
  if (walk.exhausted()) {
    std::vector<Support> kept;
    for (std::size_t i = 0; i < verified.size(); ++i) {
      if (verified[i]) kept.push_back(std::move(out.components[i]));
    }
    out.components = std::move(kept);
  }
  out.complete = n <= options.cap && !walk.exhausted();
  return out;
}

}  // namespace bordersub
