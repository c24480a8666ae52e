#pragma once

#include <cstddef>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Linear subspace of Q^n, stored by its reduced row echelon basis.
///
/// The stored basis is canonical: two Subspace values are equal exactly when
/// they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Basis as the rows of a matrix (dim x ambient).
  Mat as_rows() const { return Mat::from_rows(basis_, ambient_); }

  /// Indices of standard basis vectors spanning a complement (the non-pivot columns).
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space of m as a subspace of Q^{cols}. Basis: one vector per free column.
Subspace kernel(const Mat& m);

/// Basis of the right null space, one vector per free column of rref(m), in column order.
std::vector<Vec> kernel_basis(const Mat& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// dim(a / (a ∩ b)).
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

}  // namespace vhs
