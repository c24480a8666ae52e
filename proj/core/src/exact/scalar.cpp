#include "vhs/exact/scalar.hpp"

namespace vhs {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace vhs
