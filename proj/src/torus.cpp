#include "bordersub/torus.hpp"

#include <stdexcept>

namespace bordersub {

TorusWeight::TorusWeight(std::vector<std::int64_t> lambda, std::vector<std::int64_t> mu,
                         std::vector<std::int64_t> nu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)) {
  if (lambda_.empty()) throw std::invalid_argument("cocharacter needs n >= 1");
  if (mu_.size() != lambda_.size() || nu_.size() != lambda_.size()) {
    throw DimensionMismatch("lambda, mu, nu must have equal length");
  }
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (lambda_[i] + mu_[i] + nu_[i] != 0) {
      throw std::invalid_argument("lambda_i + mu_i + nu_i != 0 at i = " + std::to_string(i + 1));
    }
  }
}

TorusWeight TorusWeight::zero(int n) {
  if (n < 1) throw std::invalid_argument("cocharacter needs n >= 1");
  std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
  return TorusWeight(z, z, z);
}

std::int64_t weight_of(const TorusWeight& tw, const Triple& t) {
  const int n = tw.n();
  auto ok = [n](int v) { return v >= 1 && v <= n; };
  if (!ok(t.i) || !ok(t.j) || !ok(t.k)) throw std::out_of_range("triple " + to_string(t) + " out of range");
  return tw.lambda()[static_cast<std::size_t>(t.i - 1)] + tw.mu()[static_cast<std::size_t>(t.j - 1)] +
         tw.nu()[static_cast<std::size_t>(t.k - 1)];
}

TorusWeight power_of_two_cocharacter(int n) {
  if (n < 1 || n > 60) throw std::invalid_argument("power-of-two cocharacter needs 1 <= n <= 60");
  auto p2 = [](int e) { return std::int64_t{1} << e; };
  std::vector<std::int64_t> lambda, mu;
  for (int k = 1; k <= n; ++k) {
    lambda.push_back(p2(n) - p2(n - k + 1));
    mu.push_back(p2(n - k) - p2(n - 1));
  }
  return TorusWeight(lambda, mu, mu);
}

Support positive_support(const TorusWeight& tw) {
  std::vector<Triple> out;
  for (const auto& t : all_triples(tw.n())) {
    if (weight_of(tw, t) > 0) out.push_back(t);
  }
  return Support(tw.n(), std::move(out));
}

DegenerationVerdict check_degeneration_certificate(const Tensor3& t, const TorusWeight& tw) {
  if (t.n() != tw.n()) throw DimensionMismatch("tensor and cocharacter differ in n");
  DegenerationVerdict verdict;
  for (int i = 1; i <= t.n(); ++i) {
    if (t.at({i, i, i}) == 0) {
      verdict.reason = "diagonal entry " + to_string({i, i, i}) + " is zero";
      verdict.offending = Triple{i, i, i};
      return verdict;
    }
  }
  for (const auto& [x, v] : t.entries()) {
    if (x.diagonal()) continue;
    const auto w = weight_of(tw, x);
    if (w < 1) {
      verdict.reason = "triple " + to_string(x) + " has weight " + std::to_string(w) + " < 1";
      verdict.offending = x;
      verdict.weight = w;
      return verdict;
    }
  }
  verdict.valid = true;
  verdict.reason =
      "c(t).T -> sum_i T_iii a_i b_i c_i as t -> 0; diagonal rescaling maps the limit to the unit "
      "tensor, so the border subrank is n";
  return verdict;
}

}  // namespace bordersub
