#include "vhs/exact/echelon.hpp"

#include <map>

#include "vhs/error.hpp"

namespace vhs {

namespace {

using Accumulator = std::map<std::size_t, Scalar>;

// Subtracts factor * row from acc, dropping entries that cancel.
void axpy(Accumulator& acc, const Scalar& factor, const SparseVec& row) {
  for (const auto& [c, x] : row) {
    auto [it, inserted] = acc.try_emplace(c, 0);
    it->second -= factor * x;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

}  // namespace

SparseVec RowEchelon::reduce(const SparseVec& v) const {
  Accumulator acc(v.begin(), v.end());
  auto it = acc.begin();
  while (it != acc.end()) {
    const std::size_t c = it->first;
    if (c >= cols_) throw PreconditionError("RowEchelon::reduce: index out of range");
    const std::size_t r = pivot_row_[c];
    if (r == kNone) {
      ++it;
      continue;
    }
    const Scalar factor = it->second;
    axpy(acc, factor, rows_[r]);
    // The pivot entry is now gone; everything new lies strictly to the right.
    it = acc.upper_bound(c);
  }
  return {acc.begin(), acc.end()};
}

bool RowEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const Scalar inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  pivot_row_[r.front().first] = rows_.size();
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] != kNone) out.push_back(c);
  return out;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] == kNone) out.push_back(c);
  return out;
}

}  // namespace vhs
