#include "vhs/exact/subspace.hpp"

#include <algorithm>

#include "vhs/error.hpp"

namespace vhs {

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw PreconditionError("subspace operation: ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<std::size_t> all(ambient);
  for (std::size_t i = 0; i < ambient; ++i) all[i] = i;
  return coordinate(ambient, all);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<Vec> vs;
  for (std::size_t i : indices) {
    if (i >= ambient) throw PreconditionError("Subspace::coordinate: index out of range");
    Vec e(ambient);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return span(ambient, vs);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  Rref r = rref(Mat::from_rows(vectors, ambient));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.form.row_vec(i));
  s.pivots_ = std::move(r.pivots);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw PreconditionError("Subspace::contains: length mismatch");
  // Reduce against the RREF basis using its pivots.
  Vec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_[i][j]) != 0) w[j] -= f * basis_[i][j];
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(*this, other);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.form(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace kernel(const Mat& m) { return Subspace::span(m.cols(), kernel_basis(m)); }

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0; the a-part of each solution spans a ∩ b.
  const std::size_t n = a.ambient_dim();
  Mat m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()[j][r];
  std::vector<Vec> out;
  for (const Vec& sol : kernel_basis(m)) {
    Vec v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (sgn(sol[i]) == 0) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += sol[i] * a.basis()[i][r];
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(n, out);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) { return a.dim() - intersection(a, b).dim(); }

}  // namespace vhs
