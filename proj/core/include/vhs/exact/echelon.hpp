#pragma once

#include <cstddef>
#include <vector>

#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Incremental sparse row echelon form.
///
/// Rows are stored with leading coefficient 1 and distinct leading columns
/// (the first nonzero column). The set of leading columns equals the pivot set
/// of the reduced echelon form of the row space, so it does not depend on the
/// insertion order.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Inserts v; returns true when v was independent of the stored rows.
  bool insert(const SparseVec& v);
  bool insert(const Vec& v) { return insert(to_sparse(v)); }

  /// Normal form of v: v minus an element of the row space, zero on every pivot column.
  SparseVec reduce(const SparseVec& v) const;
  Vec reduce(const Vec& v) const { return to_dense(reduce(to_sparse(v)), cols_); }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  bool is_pivot(std::size_t c) const { return pivot_row_[c] != kNone; }
  std::vector<std::size_t> pivot_columns() const;
  /// Columns without a pivot, increasing; these index a basis of the quotient.
  std::vector<std::size_t> free_columns() const;

  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace vhs
