#include "bordersub/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace bordersub {
namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("format n must be positive, got " + std::to_string(n));
}

void check_in_range(int n, const Triple& t) {
  auto ok = [n](int v) { return v >= 1 && v <= n; };
  if (!ok(t.i) || !ok(t.j) || !ok(t.k)) {
    throw std::out_of_range("triple " + to_string(t) + " outside [" + std::to_string(n) + "]^3");
  }
}

}  // namespace

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
}

Support::Support(int n) : n_(n) { check_n(n); }

Support::Support(int n, std::vector<Triple> triples) : n_(n), triples_(std::move(triples)) {
  check_n(n);
  for (const auto& t : triples_) check_in_range(n, t);
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool Support::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

Support Support::with(const Triple& t) const {
  auto copy = triples_;
  copy.push_back(t);
  return Support(n_, std::move(copy));
}

Support Support::union_with(const Support& other) const {
  if (other.n_ != n_) throw DimensionMismatch("support union across different n");
  auto copy = triples_;
  copy.insert(copy.end(), other.triples_.begin(), other.triples_.end());
  return Support(n_, std::move(copy));
}

bool Support::is_subset_of(const Support& other) const {
  return n_ == other.n_ &&
         std::includes(other.triples_.begin(), other.triples_.end(), triples_.begin(), triples_.end());
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  out.reserve(static_cast<std::size_t>(n * n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<Triple> off_diagonal_triples(int n) {
  auto out = all_triples(n);
  std::erase_if(out, [](const Triple& t) { return t.diagonal(); });
  return out;
}

Tensor3::Tensor3(int n) : n_(n) { check_n(n); }

void Tensor3::check(const Triple& t) const { check_in_range(n_, t); }

Rational Tensor3::at(const Triple& t) const {
  check(t);
  const auto it = entries_.find(t);
  return it == entries_.end() ? Rational(0) : it->second;
}

void Tensor3::set(const Triple& t, const Rational& value) {
  check(t);
  if (value == 0) {
    entries_.erase(t);
  } else {
    entries_[t] = value;
  }
}

void Tensor3::add(const Triple& t, const Rational& value) {
  check(t);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(t, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Support Tensor3::support() const {
  std::vector<Triple> ts;
  ts.reserve(entries_.size());
  for (const auto& [t, v] : entries_) ts.push_back(t);
  return Support(n_, std::move(ts));
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (other.n_ != n_) throw DimensionMismatch("tensor sum across different n");
  for (const auto& [t, v] : other.entries_) add(t, v);
  return *this;
}

Tensor3& Tensor3::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [t, v] : entries_) v *= c;
  return *this;
}

VectorQ Tensor3::flatten() const {
  VectorQ v = VectorQ::Zero(static_cast<Index>(n_) * n_ * n_);
  for (const auto& [t, value] : entries_) v[flat_index(n_, t)] = value;
  return v;
}

Triple triple_at(int n, Index flat) {
  const auto f = static_cast<int>(flat);
  return {f / (n * n) + 1, (f / n) % n + 1, f % n + 1};
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_n(static_cast<int>(images_.size()));
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("images are not a permutation of 1..n");
  }
}

Permutation Permutation::identity(int n) {
  check_n(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.n() != n()) throw DimensionMismatch("composing permutations of different n");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= n(); ++i) images[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  auto images = Permutation::identity(n).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(WVariant v) {
  switch (v) {
    case WVariant::W: return "W";
    case WVariant::WPrime: return "W'";
    case WVariant::WDoublePrime: return "W''";
  }
  return "?";
}

WVariant parse_w_variant(const std::string& name) {
  if (name == "W") return WVariant::W;
  if (name == "W'" || name == "Wp") return WVariant::WPrime;
  if (name == "W''" || name == "Wpp") return WVariant::WDoublePrime;
  throw std::invalid_argument("unknown W variant: " + name);
}

Tensor3 unit_tensor(int n) {
  Tensor3 t(n);
  for (int i = 1; i <= n; ++i) t.set({i, i, i}, 1);
  return t;
}

Support build_w(int n, WVariant variant) {
  std::vector<Triple> out;
  for (const auto& t : all_triples(n)) {
    bool in = false;
    switch (variant) {
      case WVariant::W: in = t.j < t.i || t.k < t.i; break;
      case WVariant::WPrime: in = t.i < t.j || t.k < t.j; break;
      case WVariant::WDoublePrime: in = t.i < t.k || t.j < t.k; break;
    }
    if (in) out.push_back(t);
  }
  return Support(n, std::move(out));
}

Support diagonal_support(int n) {
  std::vector<Triple> out;
  for (int i = 1; i <= n; ++i) out.push_back({i, i, i});
  return Support(n, std::move(out));
}

Support build_tight_u(int n) {
  std::vector<Triple> out;
  for (const auto& t : all_triples(n)) {
    if (2 * t.i == t.j + t.k && t.j != t.i) out.push_back(t);
  }
  return Support(n, std::move(out));
}

std::int64_t w_dimension(int n) {
  check_n(n);
  const std::int64_t m = n;
  return (4 * m * m * m - 3 * m * m - m) / 6;
}

Support apply_permutation(const Permutation& s, const Support& sup) {
  if (s.n() != sup.n()) throw DimensionMismatch("permutation and support differ in n");
  std::vector<Triple> out;
  out.reserve(sup.size());
  for (const auto& t : sup) out.push_back({s(t.i), s(t.j), s(t.k)});
  return Support(sup.n(), std::move(out));
}

Tensor3 apply_permutation(const Permutation& s, const Tensor3& t) {
  if (s.n() != t.n()) throw DimensionMismatch("permutation and tensor differ in n");
  Tensor3 out(t.n());
  for (const auto& [x, v] : t.entries()) out.set({s(x.i), s(x.j), s(x.k)}, v);
  return out;
}

Tensor3 tensor_from_support(const Support& sup, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != sup.size()) throw std::invalid_argument("one coefficient per support triple required");
  Tensor3 t(sup.n());
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] == 0) {
      throw std::invalid_argument("zero coefficient at " + to_string(sup.triples()[idx]));
    }
    t.set(sup.triples()[idx], coeffs[idx]);
  }
  return t;
}

Tensor3 tensor_from_support(const Support& sup, const std::map<Triple, Rational>& coeffs) {
  if (coeffs.size() != sup.size()) throw std::invalid_argument("coefficients must be defined exactly on the support");
  std::vector<Rational> ordered;
  ordered.reserve(sup.size());
  for (const auto& t : sup) {
    const auto it = coeffs.find(t);
    if (it == coeffs.end()) throw std::invalid_argument("no coefficient for " + to_string(t));
    ordered.push_back(it->second);
  }
  return tensor_from_support(sup, ordered);
}

int small_nonzero(std::mt19937_64& rng) {
  static constexpr int kValues[6] = {-3, -2, -1, 1, 2, 3};
  return kValues[rng() % 6];
}

Tensor3 random_tensor_on(const Support& sup, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> coeffs;
  coeffs.reserve(sup.size());
  for (std::size_t i = 0; i < sup.size(); ++i) coeffs.emplace_back(small_nonzero(rng));
  return tensor_from_support(sup, coeffs);
}

Tensor3 transform(const MatrixQ& p, const MatrixQ& q, const MatrixQ& r, const Tensor3& t) {
  const int n = t.n();
  for (const MatrixQ* m : {&p, &q, &r}) {
    if (m->rows() != n || m->cols() != n) throw DimensionMismatch("transform matrices must be n x n");
  }
  Tensor3 out(n);
  for (const auto& [x, v] : t.entries()) {
    for (int a = 1; a <= n; ++a) {
      const Rational& pa = p(a - 1, x.i - 1);
      if (pa == 0) continue;
      for (int b = 1; b <= n; ++b) {
        const Rational& qb = q(b - 1, x.j - 1);
        if (qb == 0) continue;
        const Rational pq = pa * qb * v;
        for (int c = 1; c <= n; ++c) {
          const Rational& rc = r(c - 1, x.k - 1);
          if (rc != 0) out.add({a, b, c}, pq * rc);
        }
      }
    }
  }
  return out;
}

}  // namespace bordersub
