#include "bordersub/oracles.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace bordersub {
namespace {

class TightSearch {
 public:
  TightSearch(const Support& s, std::int64_t h)
      : n_(s.n()), h_(h), triples_(s.triples()), incident_(static_cast<std::size_t>(3 * n_)),
        value_(static_cast<std::size_t>(3 * n_), 0), set_(static_cast<std::size_t>(3 * n_), false) {
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      for (int v : vars(triples_[t])) incident_[static_cast<std::size_t>(v)].push_back(t);
    }
  }

  std::optional<TightWitness> run() {
    if (triples_.empty()) return fill();
    const int pin_a = var(0, triples_.front().i);
    int pin_b = var(1, n_);
    for (const auto& t : triples_) pin_b = std::min(pin_b, var(1, t.j));
    if (!assign(pin_a, 0) || !assign(pin_b, 0)) return std::nullopt;
    build_order();
    if (!dfs(0)) return std::nullopt;
    return fill();
  }

 private:
  int var(int factor, int index) const { return factor * n_ + index - 1; }
  std::array<int, 3> vars(const Triple& t) const { return {var(0, t.i), var(1, t.j), var(2, t.k)}; }

  bool constrained(int v) const { return !incident_[static_cast<std::size_t>(v)].empty(); }

  // Greedy static order: next is the variable sharing most triples with the
  // ones already placed, so values get forced as early as possible.
  void build_order() {
    std::vector<bool> placed(set_);
    for (;;) {
      int best = -1, best_score = -1;
      for (int v = 0; v < 3 * n_; ++v) {
        if (placed[static_cast<std::size_t>(v)] || !constrained(v)) continue;
        int score = 0;
        for (auto t : incident_[static_cast<std::size_t>(v)]) {
          for (int u : vars(triples_[t])) score += placed[static_cast<std::size_t>(u)] ? 1 : 0;
        }
        if (score > best_score) best = v, best_score = score;
      }
      if (best < 0) break;
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
  }

  bool assign(int v, std::int64_t x) {
    const auto sv = static_cast<std::size_t>(v);
    if (set_[sv]) return value_[sv] == x;
    if (x < -h_ || x > h_) return false;
    const int factor = v / n_;
    for (int u = factor * n_; u < (factor + 1) * n_; ++u) {
      if (set_[static_cast<std::size_t>(u)] && value_[static_cast<std::size_t>(u)] == x) return false;
    }
    set_[sv] = true;
    value_[sv] = x;
    trail_.push_back(v);
    for (auto t : incident_[sv]) {
      const auto tv = vars(triples_[t]);
      int unset = -1, count = 0;
      std::int64_t sum = 0;
      for (int u : tv) {
        if (set_[static_cast<std::size_t>(u)]) {
          sum += value_[static_cast<std::size_t>(u)];
        } else {
          unset = u;
          ++count;
        }
      }
      if (count == 0 && sum != 0) return false;
      if (count == 1 && !assign(unset, -sum)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      set_[static_cast<std::size_t>(trail_.back())] = false;
      trail_.pop_back();
    }
  }

  bool dfs(std::size_t pos) {
    while (pos < order_.size() && set_[static_cast<std::size_t>(order_[pos])]) ++pos;
    if (pos == order_.size()) return true;
    const int v = order_[pos];
    for (std::int64_t step = 0; step <= 2 * h_; ++step) {
      const std::int64_t x = step % 2 == 0 ? -step / 2 : (step + 1) / 2;  // 0, 1, -1, 2, -2, ...
      const std::size_t mark = trail_.size();
      if (assign(v, x) && dfs(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  TightWitness fill() {
    TightWitness w{n_, {}, {}, {}};
    for (int f = 0; f < 3; ++f) {
      std::set<std::int64_t> used;
      for (int p = 1; p <= n_; ++p) {
        if (set_[static_cast<std::size_t>(var(f, p))]) used.insert(value_[static_cast<std::size_t>(var(f, p))]);
      }
      auto& target = f == 0 ? w.tau_a : (f == 1 ? w.tau_b : w.tau_c);
      for (int p = 1; p <= n_; ++p) {
        const auto sv = static_cast<std::size_t>(var(f, p));
        if (!set_[sv]) {
          std::int64_t fresh = 0;
          while (used.count(fresh)) ++fresh;
          used.insert(fresh);
          value_[sv] = fresh;
        }
        target.push_back(value_[sv]);
      }
    }
    return w;
  }

  int n_;
  std::int64_t h_;
  std::vector<Triple> triples_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::int64_t> value_;
  std::vector<bool> set_;
  std::vector<int> trail_;
  std::vector<int> order_;
};

}  // namespace

std::optional<TightWitness> tight_by_exhaustive_search(const Support& s, std::int64_t half_width) {
  const std::int64_t h = half_width > 0 ? half_width : static_cast<std::int64_t>(9) * s.n() * s.n();
  return TightSearch(s, h).run();
}

std::int64_t count_w_by_enumeration(int n, WVariant variant) {
  std::int64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        bool in = false;
        switch (variant) {
          case WVariant::W: in = j < i || k < i; break;
          case WVariant::WPrime: in = i < j || k < j; break;
          case WVariant::WDoublePrime: in = i < k || j < k; break;
        }
        count += in ? 1 : 0;
      }
    }
  }
  return count;
}

}  // namespace bordersub
