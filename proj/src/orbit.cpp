#include "bordersub/orbit.hpp"

#include "bordersub/linalg.hpp"

#include <optional>
#include <random>

namespace bordersub {
namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t e = 1; e < p.size(); ++e) d.push_back(p[e] * static_cast<long>(e));
  trim(d);
  return d;
}

// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divide(Polynomial dividend, const Polynomial& divisor) {
  Polynomial quotient;
  trim(dividend);
  if (dividend.size() < divisor.size()) return {quotient, dividend};
  quotient.assign(dividend.size() - divisor.size() + 1, Rational(0));
  const Rational& lead = divisor.back();
  while (!dividend.empty() && dividend.size() >= divisor.size()) {
    const std::size_t shift = dividend.size() - divisor.size();
    const Rational factor = dividend.back() / lead;
    quotient[shift] = factor;
    for (std::size_t e = 0; e < divisor.size(); ++e) dividend[shift + e] -= factor * divisor[e];
    trim(dividend);
  }
  return {quotient, dividend};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

MatrixQ evaluate(const Polynomial& p, const MatrixQ& m) {
  MatrixQ acc = MatrixQ::Zero(m.rows(), m.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = (acc * m).eval();
    acc += MatrixQ::Identity(m.rows(), m.cols()) * *it;
  }
  return acc;
}

bool is_zero(const MatrixQ& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

MatrixQ flattening(const Tensor3& t, int side) {
  const int n = t.n();
  MatrixQ f = MatrixQ::Zero(n, static_cast<Index>(n) * n);
  for (const auto& [e, v] : t.entries()) {
    const int a = side == 0 ? e.i : (side == 1 ? e.j : e.k);
    const int b = side == 0 ? e.j : e.i;
    const int c = side == 2 ? e.j : e.k;
    f(a - 1, static_cast<Index>(b - 1) * n + (c - 1)) = v;
  }
  return f;
}

std::optional<MatrixQ> invertible_combination(const SliceFamily& family, std::mt19937_64& rng) {
  for (const auto& s : family.slices) {
    if (auto inv = inverse(s)) return inv;
  }
  for (int attempt = 0; attempt < 5; ++attempt) {
    MatrixQ combo = MatrixQ::Zero(family.n, family.n);
    for (const auto& s : family.slices) combo += s * Rational(small_nonzero(rng));
    if (auto inv = inverse(combo)) return inv;
  }
  return std::nullopt;
}

// Returns an empty string when the family passes.
std::optional<std::string> check_side(const Tensor3& t, int side, std::mt19937_64& rng, bool& inconclusive) {
  const auto family = slices(t, side);
  const auto x0_inv = invertible_combination(family, rng);
  if (!x0_inv) {
    inconclusive = true;
    return "no invertible slice combination found on side " + std::to_string(side);
  }
  std::vector<MatrixQ> normalized;
  for (const auto& s : family.slices) normalized.push_back(s * *x0_inv);
  for (std::size_t a = 0; a < normalized.size(); ++a) {
    for (std::size_t b = a + 1; b < normalized.size(); ++b) {
      if (!is_zero(normalized[a] * normalized[b] - normalized[b] * normalized[a])) {
        return "side " + std::to_string(side) + ": normalized slices " + std::to_string(a + 1) + " and " +
               std::to_string(b + 1) + " do not commute";
      }
    }
  }
  for (std::size_t a = 0; a < normalized.size(); ++a) {
    if (!is_diagonalizable(normalized[a])) {
      return "side " + std::to_string(side) + ": normalized slice " + std::to_string(a + 1) +
             " is not diagonalizable (nonzero nilpotent part)";
    }
  }
  return std::nullopt;
}

}  // namespace

SliceFamily slices(const Tensor3& t, int side) {
  if (side < 0 || side > 2) throw std::invalid_argument("slice side must be 0, 1 or 2");
  const int n = t.n();
  SliceFamily family{n, std::vector<MatrixQ>(static_cast<std::size_t>(n), MatrixQ::Zero(n, n))};
  for (const auto& [e, v] : t.entries()) {
    switch (side) {
      case 0: family.slices[static_cast<std::size_t>(e.i - 1)](e.j - 1, e.k - 1) = v; break;
      case 1: family.slices[static_cast<std::size_t>(e.j - 1)](e.i - 1, e.k - 1) = v; break;
      default: family.slices[static_cast<std::size_t>(e.k - 1)](e.i - 1, e.j - 1) = v; break;
    }
  }
  return family;
}

bool is_concise(const Tensor3& t) {
  for (int side = 0; side < 3; ++side) {
    if (rank(flattening(t, side)) != t.n()) return false;
  }
  return true;
}

Polynomial characteristic_polynomial(const MatrixQ& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  Polynomial p(static_cast<std::size_t>(n + 1), Rational(0));
  p[static_cast<std::size_t>(n)] = 1;
  MatrixQ aux = MatrixQ::Zero(n, n);
  const MatrixQ id = MatrixQ::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    aux = (m * aux + id * p[static_cast<std::size_t>(n - k + 1)]).eval();
    const Rational c = -(m * aux).trace() / Rational(k);
    p[static_cast<std::size_t>(n - k)] = c;
  }
  return p;
}

bool is_diagonalizable(const MatrixQ& m) {
  const auto p = characteristic_polynomial(m);
  const auto g = gcd(p, derivative(p));
  const auto squarefree = divide(p, g).first;
  return is_zero(evaluate(squarefree, m));
}

std::string to_string(OrbitVerdict v) {
  switch (v) {
    case OrbitVerdict::Member: return "member";
    case OrbitVerdict::NonMember: return "non_member";
    case OrbitVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

OrbitResult unit_orbit_member(const Tensor3& t, std::uint64_t seed) {
  if (!is_concise(t)) return {OrbitVerdict::NonMember, "not concise: some flattening has rank below n"};
  std::mt19937_64 rng(seed);
  for (int side = 0; side < 2; ++side) {
    bool inconclusive = false;
    if (auto failure = check_side(t, side, rng, inconclusive)) {
      return {inconclusive ? OrbitVerdict::Inconclusive : OrbitVerdict::NonMember, *failure};
    }
  }
  return {OrbitVerdict::Member, "normalized slices commute and are diagonalizable on both sides"};
}

}  // namespace bordersub
