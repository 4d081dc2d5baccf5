#pragma once

// Sparse n x n x n tensors over the rationals, coordinate supports, and the
// diagonal action of the symmetric group on index triples. Indices are
// 1-based throughout.

#include "bordersub/errors.hpp"
#include "bordersub/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace bordersub {

struct Triple {
  int i = 1;
  int j = 1;
  int k = 1;
  auto operator<=>(const Triple&) const = default;
  bool diagonal() const { return i == j && j == k; }
};

std::string to_string(const Triple& t);

/// Finite set of triples in [n]^3, kept sorted and duplicate free.
class Support {
 public:
  explicit Support(int n);
  Support(int n, std::vector<Triple> triples);

  int n() const { return n_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& t) const;
  const std::vector<Triple>& triples() const { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  /// Returns a copy with t added (no-op if present).
  Support with(const Triple& t) const;
  Support union_with(const Support& other) const;
  bool is_subset_of(const Support& other) const;

  bool operator==(const Support&) const = default;
  auto operator<=>(const Support&) const = default;

 private:
  int n_;
  std::vector<Triple> triples_;
};

/// All of [n]^3 in lexicographic order.
std::vector<Triple> all_triples(int n);
/// [n]^3 without the diagonal, lexicographic.
std::vector<Triple> off_diagonal_triples(int n);

/// Sparse tensor; absent entries are zero and no stored coefficient is zero.
class Tensor3 {
 public:
  explicit Tensor3(int n);

  int n() const { return n_; }
  const std::map<Triple, Rational>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational at(const Triple& t) const;
  /// Setting zero erases the entry.
  void set(const Triple& t, const Rational& value);
  void add(const Triple& t, const Rational& value);

  Support support() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator*=(const Rational& c);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator*(const Rational& c, Tensor3 t) { return t *= c; }
  bool operator==(const Tensor3&) const = default;

  /// Coordinate vector of length n^3, index (i-1)n^2 + (j-1)n + (k-1).
  VectorQ flatten() const;

 private:
  void check(const Triple& t) const;
  int n_;
  std::map<Triple, Rational> entries_;
};

inline Index flat_index(int n, const Triple& t) {
  return static_cast<Index>((t.i - 1) * n * n + (t.j - 1) * n + (t.k - 1));
}
Triple triple_at(int n, Index flat);

/// A bijection of [n], stored as its images sigma(1..n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// (*this o other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Every permutation of [n] in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(int n);

enum class WVariant { W, WPrime, WDoublePrime };

std::string to_string(WVariant v);
WVariant parse_w_variant(const std::string& name);

Tensor3 unit_tensor(int n);

/// W: some of j,k below i.  W': some of i,k below j.  W'': some of i,j below k.
Support build_w(int n, WVariant variant = WVariant::W);
Support diagonal_support(int n);
/// Triples with 2i = j + k off the diagonal.
Support build_tight_u(int n);

/// Closed-form size of each W variant: (4n^3 - 3n^2 - n)/6.
std::int64_t w_dimension(int n);

Support apply_permutation(const Permutation& s, const Support& sup);
Tensor3 apply_permutation(const Permutation& s, const Tensor3& t);

/// coeffs are matched to sup's sorted triples.
Tensor3 tensor_from_support(const Support& sup, const std::vector<Rational>& coeffs);
Tensor3 tensor_from_support(const Support& sup, const std::map<Triple, Rational>& coeffs);

/// Draws a value uniformly from {-3,-2,-1,1,2,3}; the mapping from raw
/// generator output is fixed so results agree across standard libraries.
int small_nonzero(std::mt19937_64& rng);
Tensor3 random_tensor_on(const Support& sup, std::uint64_t seed);

/// Change of basis (P, Q, R) . T with entries sum P[a,i] Q[b,j] R[c,k] T[i,j,k].
Tensor3 transform(const MatrixQ& p, const MatrixQ& q, const MatrixQ& r, const Tensor3& t);

}  // namespace bordersub
