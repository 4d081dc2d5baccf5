#include "bordersub/tight.hpp"

#include "bordersub/linalg.hpp"

#include <random>
#include <set>

namespace bordersub {
namespace {

// Coordinates of Q^{3n}: tau_A(1..n), tau_B(1..n), tau_C(1..n).
Index coordinate(int n, int factor, int index) { return static_cast<Index>(factor) * n + index - 1; }

bool injective(const std::vector<std::int64_t>& v) {
  return std::set<std::int64_t>(v.begin(), v.end()).size() == v.size();
}

constexpr std::uint64_t kWitnessSeed = 0x7167687457ULL;

}  // namespace

TightWitness arithmetic_progression_witness(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  TightWitness w{n, {}, {}, {}};
  for (int v = 1; v <= n; ++v) {
    w.tau_a.push_back(3 - 2 * v);
    w.tau_b.push_back(v);
    w.tau_c.push_back(v - 3);
  }
  return w;
}

bool check_tight_witness(const Support& s, const TightWitness& w) {
  if (w.n != s.n() || static_cast<int>(w.tau_a.size()) != w.n || static_cast<int>(w.tau_b.size()) != w.n ||
      static_cast<int>(w.tau_c.size()) != w.n) {
    throw DimensionMismatch("witness and support differ in n");
  }
  if (!injective(w.tau_a) || !injective(w.tau_b) || !injective(w.tau_c)) return false;
  for (const auto& t : s) {
    const auto sum = w.tau_a[static_cast<std::size_t>(t.i - 1)] + w.tau_b[static_cast<std::size_t>(t.j - 1)] +
                     w.tau_c[static_cast<std::size_t>(t.k - 1)];
    if (sum != 0) return false;
  }
  return true;
}

std::optional<TightWitness> find_tight_witness(const Support& s) {
  const int n = s.n();
  MatrixQ equations = MatrixQ::Zero(static_cast<Index>(s.size()), 3 * static_cast<Index>(n));
  Index row = 0;
  for (const auto& t : s) {
    equations(row, coordinate(n, 0, t.i)) += 1;
    equations(row, coordinate(n, 1, t.j)) += 1;
    equations(row, coordinate(n, 2, t.k)) += 1;
    ++row;
  }
  const MatrixQ basis = kernel_basis(equations);

  struct Collision {
    Index p, q;
  };
  std::vector<Collision> collisions;
  for (int f = 0; f < 3; ++f) {
    for (int p = 1; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        const Index cp = coordinate(n, f, p), cq = coordinate(n, f, q);
        if (basis.row(cp) == basis.row(cq)) return std::nullopt;  // forced collision
        collisions.push_back({cp, cq});
      }
    }
  }

  // Each collision is a proper hyperplane in coefficient space, so a random
  // coefficient vector avoids all of them with high probability; widen the
  // range on repeated failure.
  std::mt19937_64 rng(kWitnessSeed);
  VectorQ point;
  for (std::int64_t range = 3;; range *= 4) {
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      VectorQ coeffs(basis.cols());
      for (Index c = 0; c < coeffs.size(); ++c) {
        coeffs[c] = Rational(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range);
      }
      point = basis * coeffs;
      found = true;
      for (const auto& col : collisions) {
        if (point[col.p] == point[col.q]) {
          found = false;
          break;
        }
      }
    }
    if (found) break;
  }

  BigInt scale(1);
  for (Index c = 0; c < point.size(); ++c) scale = lcm(scale, BigInt(denominator(point[c])));
  std::vector<BigInt> values;
  for (Index c = 0; c < point.size(); ++c) values.push_back(BigInt(numerator(point[c] * Rational(scale))));
  // (a, 0, -a) shifts preserve every equation.
  const BigInt shift = values[static_cast<std::size_t>(coordinate(n, 2, n))];
  for (int v = 1; v <= n; ++v) {
    values[static_cast<std::size_t>(coordinate(n, 0, v))] += shift;
    values[static_cast<std::size_t>(coordinate(n, 2, v))] -= shift;
  }
  BigInt g(0);
  for (const auto& v : values) g = gcd(g, v);
  TightWitness w{n, {}, {}, {}};
  for (int f = 0; f < 3; ++f) {
    auto& target = f == 0 ? w.tau_a : (f == 1 ? w.tau_b : w.tau_c);
    for (int v = 1; v <= n; ++v) {
      BigInt value = values[static_cast<std::size_t>(coordinate(n, f, v))];
      if (g > 1) value /= g;
      target.push_back(to_int64(value));
    }
  }
  if (!check_tight_witness(s, w)) throw InvariantViolation("constructed tight witness fails its own check");
  return w;
}

}  // namespace bordersub
