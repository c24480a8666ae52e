#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vhs {

/// Weight n and Hodge numbers (h^{n,0}, ..., h^{0,n}).
///
/// Hodge levels are indexed by p = n..0; level p has dimension h^{p,n-p}.
class HodgeNumbers {
 public:
  HodgeNumbers() = default;
  /// Throws PreconditionError unless h has n+1 entries and is palindromic.
  HodgeNumbers(int weight, std::vector<std::size_t> h);

  /// Parses "1,2,2,1" (weight is inferred from the length).
  static HodgeNumbers parse(const std::string& text);

  int weight() const { return n_; }
  const std::vector<std::size_t>& numbers() const { return h_; }
  /// h^{p,n-p}.
  std::size_t level_dim(int p) const;
  /// f^p = sum of h^{p',n-p'} over p' >= p.
  std::size_t f(int p) const;
  std::size_t total_dim() const;
  bool all_nonzero() const;
  bool all_at_least(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;

 private:
  int n_ = 0;
  std::vector<std::size_t> h_{0};
};

/// Every palindromic Hodge vector of weight n with entries drawn from values.
std::vector<HodgeNumbers> palindromic_sweep(int n, const std::vector<std::size_t>& values);

}  // namespace vhs
