#include "vhs/jacobian/graded_ideal.hpp"

#include <string>

#include "vhs/error.hpp"
#include "vhs/exact/modular.hpp"

namespace vhs {

namespace {

void check_generators(std::size_t num_vars, const std::vector<Poly>& gens) {
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) throw PreconditionError("generator has the wrong number of variables");
    if (!g.is_homogeneous()) throw PreconditionError("generator is not homogeneous: " + g.to_string());
  }
}

}  // namespace

std::size_t monomial_count(std::size_t num_vars, int k) {
  if (k < 0) return 0;
  if (num_vars == 0) return k == 0 ? 1 : 0;
  return binomial(static_cast<std::size_t>(k) + num_vars - 1, num_vars - 1);
}

IdealSlice::IdealSlice(std::size_t num_vars, int degree, const std::vector<Poly>& gens)
    : num_vars_(num_vars),
      degree_(degree),
      monomials_(monomial_basis(num_vars, degree)),
      echelon_(monomials_.size()) {
  check_generators(num_vars, gens);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  for (const auto& g : gens) {
    const int dg = g.degree();
    if (dg < 0 || dg > degree) continue;
    for (const auto& m : monomial_basis(num_vars, degree - dg)) {
      if (echelon_.rank() == monomials_.size()) break;
      echelon_.insert(coordinates(Poly::monomial(m) * g));
    }
  }
  quotient_ = echelon_.free_columns();
}

std::vector<Monomial> IdealSlice::quotient_basis() const {
  std::vector<Monomial> out;
  out.reserve(quotient_.size());
  for (auto i : quotient_) out.push_back(monomials_[i]);
  return out;
}

std::size_t IdealSlice::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw PreconditionError("monomial of degree " + std::to_string(monomial_degree(m)) + " in a slice of degree " +
                            std::to_string(degree_));
  return it->second;
}

SparseVec IdealSlice::coordinates(const Poly& p) const {
  if (p.num_vars() != num_vars_) throw PreconditionError("polynomial has the wrong number of variables");
  std::map<std::size_t, Scalar> acc;
  for (const auto& [m, c] : p.terms()) acc.emplace(index_of(m), c);
  return {acc.begin(), acc.end()};
}

Vec IdealSlice::quotient_coordinates(const Poly& p) const {
  const SparseVec r = echelon_.reduce(coordinates(p));
  Vec out(quotient_.size());
  std::size_t j = 0;
  for (const auto& [col, c] : r) {
    while (quotient_[j] < col) ++j;
    out[j] = c;
  }
  return out;
}

bool IdealSlice::contains(const Poly& p) const { return echelon_.contains(coordinates(p)); }

GradedIdeal::GradedIdeal(std::size_t num_vars, std::vector<Poly> gens, std::size_t budget)
    : num_vars_(num_vars), gens_(std::move(gens)), budget_(budget), cache_(std::make_shared<Cache>()) {
  check_generators(num_vars_, gens_);
}

bool GradedIdeal::fits_budget(int k) const { return monomial_count(num_vars_, k) <= budget_; }

const IdealSlice& GradedIdeal::slice(int k) const {
  if (k < 0) throw PreconditionError("negative degree " + std::to_string(k));
  if (!fits_budget(k))
    throw BudgetExceeded("dim V^" + std::to_string(k) + " = " + std::to_string(monomial_count(num_vars_, k)) +
                         " exceeds the budget " + std::to_string(budget_));
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->slices[k];
  if (!slot) slot = std::make_unique<IdealSlice>(num_vars_, k, gens_);
  return *slot;
}

std::size_t GradedIdeal::modular_quotient_dim(int k) const {
  if (k < 0) throw PreconditionError("negative degree " + std::to_string(k));
  if (!fits_budget(k))
    throw BudgetExceeded("dim V^" + std::to_string(k) + " = " + std::to_string(monomial_count(num_vars_, k)) +
                         " exceeds the budget " + std::to_string(budget_));
  const auto monomials = monomial_basis(num_vars_, k);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  ModEchelon ech(monomials.size());
  for (const auto& g : gens_) {
    const int dg = g.degree();
    if (dg < 0 || dg > k) continue;
    std::vector<std::pair<Monomial, std::uint64_t>> terms;
    for (const auto& [m, c] : g.terms()) terms.emplace_back(m, modp::reduce(c));
    for (const auto& m : monomial_basis(num_vars_, k - dg)) {
      if (ech.rank() == monomials.size()) break;
      std::vector<std::uint64_t> row(monomials.size(), 0);
      Monomial prod(num_vars_);
      for (const auto& [t, c] : terms) {
        for (std::size_t i = 0; i < num_vars_; ++i) prod[i] = t[i] + m[i];
        row[index.at(prod)] = c;
      }
      ech.insert(row);
    }
  }
  return monomials.size() - ech.rank();
}

std::size_t GradedIdeal::ideal_dim(int k) const { return slice(k).ideal_dim(); }
std::size_t GradedIdeal::quotient_dim(int k) const { return slice(k).quotient_dim(); }

Vec GradedIdeal::reduce(const Poly& p) const {
  const int k = p.degree();
  if (k == -2) throw PreconditionError("cannot reduce a non-homogeneous polynomial");
  if (k == -1) throw PreconditionError("cannot infer the degree of the zero polynomial");
  return slice(k).quotient_coordinates(p);
}

std::size_t ideal_slice_dim(const std::vector<Poly>& gens, int k) {
  if (gens.empty()) return 0;
  return IdealSlice(gens.front().num_vars(), k, gens).ideal_dim();
}

std::vector<long long> complete_intersection_hilbert(std::size_t num_vars, const std::vector<int>& degrees,
                                                     int max_degree) {
  const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<long long> h(len, 0);
  for (std::size_t k = 0; k < len; ++k) h[k] = static_cast<long long>(monomial_count(num_vars, static_cast<int>(k)));
  for (int d : degrees) {
    for (std::size_t k = len; k-- > 0;)
      if (k >= static_cast<std::size_t>(d)) h[k] -= h[k - d];
  }
  return h;
}

}  // namespace vhs
