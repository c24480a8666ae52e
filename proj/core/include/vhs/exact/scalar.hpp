#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vhs {

/// Exact rational number, always kept in canonical form by GMP.
using Scalar = mpq_class;

/// Dense coordinate vector.
using Vec = std::vector<Scalar>;

/// Sparse coordinate vector: (index, value) pairs, strictly increasing index, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
inline Scalar fraction(long num, long den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

/// Scalar product of two dense vectors of equal length.
Scalar dot(const Vec& a, const Vec& b);

}  // namespace vhs
