#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "vhs/exact/echelon.hpp"
#include "vhs/exact/matrix.hpp"
#include "vhs/jacobian/poly.hpp"

namespace vhs {

inline constexpr std::size_t kDefaultRingBudget = 5000;

/// Degree-k piece of a homogeneous ideal: the span of monomial multiples of the generators
/// inside V^k, kept in echelon form over the monomial basis.
class IdealSlice {
 public:
  IdealSlice(std::size_t num_vars, int degree, const std::vector<Poly>& gens);

  int degree() const { return degree_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const RowEchelon& echelon() const { return echelon_; }

  std::size_t ambient_dim() const { return monomials_.size(); }
  std::size_t ideal_dim() const { return echelon_.rank(); }
  std::size_t quotient_dim() const { return quotient_.size(); }
  /// Monomials outside the pivot set, lexicographic order; a basis of V^k / I_k.
  std::vector<Monomial> quotient_basis() const;
  const std::vector<std::size_t>& quotient_indices() const { return quotient_; }

  /// Index of m in monomials(); throws PreconditionError for a monomial of another degree.
  std::size_t index_of(const Monomial& m) const;
  /// Coordinates of a degree-k polynomial in the monomial basis.
  SparseVec coordinates(const Poly& p) const;
  /// Coordinates of the class of p in the quotient basis.
  Vec quotient_coordinates(const Poly& p) const;
  bool contains(const Poly& p) const;

 private:
  std::size_t num_vars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
  RowEchelon echelon_;
  std::vector<std::size_t> quotient_;
};

/// A homogeneous ideal with memoized slices. Slices are built on demand under a lock and
/// then shared read-only; copies share the memo table.
class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(std::size_t num_vars, std::vector<Poly> gens, std::size_t budget = kDefaultRingBudget);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  std::size_t budget() const { return budget_; }

  /// Throws BudgetExceeded when dim V^k exceeds the budget.
  const IdealSlice& slice(int k) const;
  std::size_t ideal_dim(int k) const;
  std::size_t quotient_dim(int k) const;
  Vec reduce(const Poly& p) const;
  bool fits_budget(int k) const;
  /// dim V^k / I_k computed modulo p = 2^61 - 1; an upper bound for the rational value.
  std::size_t modular_quotient_dim(int k) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<IdealSlice>> slices;
  };
  std::size_t num_vars_ = 0;
  std::vector<Poly> gens_;
  std::size_t budget_ = kDefaultRingBudget;
  std::shared_ptr<Cache> cache_;
};

/// dim V^k in num_vars variables.
std::size_t monomial_count(std::size_t num_vars, int k);

/// dim of span{m * g : deg m + deg g = k}; generators must be homogeneous.
std::size_t ideal_slice_dim(const std::vector<Poly>& gens, int k);

/// Coefficients h_0..h_max of prod_i (1 - t^{d_i}) / (1 - t)^num_vars.
std::vector<long long> complete_intersection_hilbert(std::size_t num_vars, const std::vector<int>& degrees,
                                                     int max_degree);

}  // namespace vhs
