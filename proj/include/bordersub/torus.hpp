#pragma once

// Cocharacters t -> (diag(t^lambda), diag(t^mu), diag(t^nu)) of the torus
// stabilizing the unit tensor, and the degeneration certificates they give.

#include "bordersub/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bordersub {

/// Integer cocharacter with lambda_i + mu_i + nu_i = 0 for every i.
class TorusWeight {
 public:
  TorusWeight(std::vector<std::int64_t> lambda, std::vector<std::int64_t> mu,
              std::vector<std::int64_t> nu);
  static TorusWeight zero(int n);

  int n() const { return static_cast<int>(lambda_.size()); }
  const std::vector<std::int64_t>& lambda() const { return lambda_; }
  const std::vector<std::int64_t>& mu() const { return mu_; }
  const std::vector<std::int64_t>& nu() const { return nu_; }

  bool operator==(const TorusWeight&) const = default;

 private:
  std::vector<std::int64_t> lambda_, mu_, nu_;
};

/// Exponent of t on a_i (x) b_j (x) c_k: lambda_i + mu_j + nu_k.
std::int64_t weight_of(const TorusWeight& tw, const Triple& t);

/// lambda_k = 2^n - 2^(n-k+1), mu_k = nu_k = 2^(n-k) - 2^(n-1). Every triple
/// of W(n) gets weight 2^(n-j) + 2^(n-k) - 2^(n-i+1) >= 1.
TorusWeight power_of_two_cocharacter(int n);

/// Triples sent to zero in the limit t -> 0.
Support positive_support(const TorusWeight& tw);

struct DegenerationVerdict {
  bool valid = false;
  std::string reason;
  std::optional<Triple> offending;   // first rejected triple
  std::optional<std::int64_t> weight;
};

/// Valid iff T has every diagonal entry and every off-diagonal triple of its
/// support has weight >= 1. Then c(t).T tends to sum_i T_iii a_i b_i c_i,
/// which diagonal rescaling turns into the unit tensor, so T has border
/// subrank n.
DegenerationVerdict check_degeneration_certificate(const Tensor3& t, const TorusWeight& tw);

}  // namespace bordersub
