#pragma once

#include <cstddef>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Sparse square matrix; entries sorted by (row, col) with no zeros.
class SparseEndo {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  SparseEndo() = default;
  explicit SparseEndo(std::size_t dim) : dim_(dim) {}
  /// Entries may be unsorted and may repeat; they are summed.
  SparseEndo(std::size_t dim, std::vector<Entry> entries);

  static SparseEndo from_dense(const Mat& m);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Scalar at(std::size_t row, std::size_t col) const;

  Mat to_dense() const;
  SparseEndo transpose() const;
  Vec apply(const Vec& v) const;

  friend SparseEndo operator*(const SparseEndo& a, const SparseEndo& b);
  friend SparseEndo operator+(const SparseEndo& a, const SparseEndo& b);
  friend SparseEndo operator-(const SparseEndo& a, const SparseEndo& b);
  friend SparseEndo operator*(const Scalar& s, const SparseEndo& a);
  friend bool operator==(const SparseEndo& a, const SparseEndo& b);

 private:
  void normalize();
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// [a, b] = ab - ba.
SparseEndo commutator(const SparseEndo& a, const SparseEndo& b);

}  // namespace vhs
