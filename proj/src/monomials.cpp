#include "bordersub/monomials.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace bordersub {
namespace {

// Slot-count imbalance: first n entries count(first) - count(second), last n
// entries count(first) - count(third), per index value.
using Imbalance = std::vector<int>;

void shift(Imbalance& d, int n, const Triple& t, int sign) {
  d[static_cast<std::size_t>(t.i - 1)] += sign;
  d[static_cast<std::size_t>(t.j - 1)] -= sign;
  d[static_cast<std::size_t>(n + t.i - 1)] += sign;
  d[static_cast<std::size_t>(n + t.k - 1)] -= sign;
}

bool is_zero(const Imbalance& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

// Each factor moves at most two units of either half, so states farther than
// 2 * remaining from zero can never close up.
bool reachable(const Imbalance& d, int n, int remaining) {
  int first = 0, second = 0;
  for (int v = 0; v < n; ++v) {
    first += std::abs(d[static_cast<std::size_t>(v)]);
    second += std::abs(d[static_cast<std::size_t>(n + v)]);
  }
  return first <= 2 * remaining && second <= 2 * remaining;
}

void enumerate(const std::vector<Triple>& pool, int n, int max_degree, std::size_t start,
               std::vector<Triple>& chosen, Imbalance& d, std::vector<Monomial>& out) {
  const int degree = static_cast<int>(chosen.size());
  if (degree > 0 && is_zero(d)) out.emplace_back(n, chosen);
  if (degree == max_degree) return;
  for (std::size_t idx = start; idx < pool.size(); ++idx) {
    shift(d, n, pool[idx], +1);
    if (reachable(d, n, max_degree - degree - 1)) {
      chosen.push_back(pool[idx]);
      enumerate(pool, n, max_degree, idx, chosen, d, out);
      chosen.pop_back();
    }
    shift(d, n, pool[idx], -1);
  }
}

}  // namespace

Monomial::Monomial(int n, std::vector<Triple> factors) : n_(n), factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("monomial must have positive degree");
  // Support's constructor validates the range but deduplicates, so check by hand.
  for (const auto& t : factors_) {
    if (t.i < 1 || t.j < 1 || t.k < 1 || t.i > n || t.j > n || t.k > n) {
      throw std::out_of_range("factor " + to_string(t) + " outside [" + std::to_string(n) + "]^3");
    }
  }
  std::sort(factors_.begin(), factors_.end());
}

bool Monomial::operator<(const Monomial& other) const {
  if (degree() != other.degree()) return degree() < other.degree();
  return factors_ < other.factors_;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& t : m.factors()) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(t.i) + std::to_string(t.j) + std::to_string(t.k);
  }
  return out;
}

bool is_torus_invariant(const Monomial& m) {
  Imbalance d(static_cast<std::size_t>(2 * m.n()), 0);
  for (const auto& t : m.factors()) shift(d, m.n(), t, +1);
  return is_zero(d);
}

Monomial apply_permutation(const Permutation& s, const Monomial& m) {
  if (s.n() != m.n()) throw DimensionMismatch("permutation and monomial differ in n");
  std::vector<Triple> out;
  for (const auto& t : m.factors()) out.push_back({s(t.i), s(t.j), s(t.k)});
  return Monomial(m.n(), std::move(out));
}

std::vector<Monomial> generator_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Monomial> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(n, std::vector<Triple>{{i, i, i}});
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.emplace_back(n, std::vector<Triple>{{i, i, j}, {j, j, i}});
      out.emplace_back(n, std::vector<Triple>{{i, j, i}, {j, i, j}});
      out.emplace_back(n, std::vector<Triple>{{i, j, j}, {j, i, i}});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        out.emplace_back(n, std::vector<Triple>{{i, j, k}, {j, k, i}, {k, i, j}});
        out.emplace_back(n, std::vector<Triple>{{i, k, j}, {k, j, i}, {j, i, k}});
      }
    }
  }
  return out;
}

std::vector<Monomial> invariant_monomials_within(const Support& s, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  std::vector<Monomial> out;
  std::vector<Triple> chosen;
  Imbalance d(static_cast<std::size_t>(2 * s.n()), 0);
  enumerate(s.triples(), s.n(), max_degree, 0, chosen, d, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Monomial> find_invariant_monomial_within(const Support& s, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  const int n = s.n();
  struct Step {
    Imbalance previous;
    Triple factor;
  };
  // levels[d] maps each state reachable with d factors to one way of getting there.
  std::vector<std::map<Imbalance, Step>> levels(1);
  levels[0].emplace(Imbalance(static_cast<std::size_t>(2 * n), 0), Step{});
  for (int degree = 1; degree <= max_degree; ++degree) {
    std::map<Imbalance, Step> next;
    for (const auto& [state, how] : levels.back()) {
      for (const auto& t : s) {
        Imbalance d = state;
        shift(d, n, t, +1);
        if (!reachable(d, n, max_degree - degree)) continue;
        next.try_emplace(std::move(d), Step{state, t});
      }
    }
    levels.push_back(std::move(next));
    const Imbalance zero(static_cast<std::size_t>(2 * n), 0);
    if (levels.back().contains(zero)) {
      std::vector<Triple> factors;
      Imbalance state = zero;
      for (int back = degree; back >= 1; --back) {
        const auto& step = levels[static_cast<std::size_t>(back)].at(state);
        factors.push_back(step.factor);
        state = step.previous;
      }
      return Monomial(n, std::move(factors));
    }
    if (levels.back().empty()) break;
  }
  return std::nullopt;
}

}  // namespace bordersub
