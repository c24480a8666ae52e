#include "vhs/hodge/endo.hpp"

#include <algorithm>
#include <map>

#include "vhs/error.hpp"

namespace vhs {

SparseEndo::SparseEndo(std::size_t dim, std::vector<Entry> entries) : dim_(dim), entries_(std::move(entries)) {
  normalize();
}

void SparseEndo::normalize() {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
  for (auto& e : entries_) {
    if (e.row >= dim_ || e.col >= dim_) throw PreconditionError("SparseEndo: entry out of range");
    acc[{e.row, e.col}] += e.value;
  }
  entries_.clear();
  for (auto& [rc, v] : acc)
    if (sgn(v) != 0) entries_.push_back({rc.first, rc.second, v});
}

SparseEndo SparseEndo::from_dense(const Mat& m) {
  if (!m.is_square()) throw PreconditionError("SparseEndo::from_dense: matrix not square");
  SparseEndo out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out.entries_.push_back({r, c, m(r, c)});
  return out;
}

Scalar SparseEndo::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::make_pair(e.row, e.col) < k;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

Mat SparseEndo::to_dense() const {
  Mat m(dim_, dim_);
  for (const auto& e : entries_) m(e.row, e.col) = e.value;
  return m;
}

Vec SparseEndo::apply(const Vec& v) const {
  if (v.size() != dim_) throw PreconditionError("SparseEndo::apply: length mismatch");
  Vec out(dim_);
  for (const auto& e : entries_)
    if (sgn(v[e.col]) != 0) out[e.row] += e.value * v[e.col];
  return out;
}

SparseEndo SparseEndo::transpose() const {
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return SparseEndo(dim_, std::move(t));
}

SparseEndo operator*(const SparseEndo& a, const SparseEndo& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("SparseEndo product: dimension mismatch");
  // Row index of b for quick lookup.
  std::vector<std::vector<const SparseEndo::Entry*>> b_rows(b.dim_);
  for (const auto& e : b.entries_) b_rows[e.row].push_back(&e);
  std::vector<SparseEndo::Entry> out;
  for (const auto& ea : a.entries_)
    for (const auto* eb : b_rows[ea.col]) out.push_back({ea.row, eb->col, ea.value * eb->value});
  return SparseEndo(a.dim_, std::move(out));
}

SparseEndo operator+(const SparseEndo& a, const SparseEndo& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("SparseEndo sum: dimension mismatch");
  std::vector<SparseEndo::Entry> out = a.entries_;
  out.insert(out.end(), b.entries_.begin(), b.entries_.end());
  return SparseEndo(a.dim_, std::move(out));
}

SparseEndo operator-(const SparseEndo& a, const SparseEndo& b) { return a + Scalar(-1) * b; }

SparseEndo operator*(const Scalar& s, const SparseEndo& a) {
  SparseEndo out(a.dim_);
  if (sgn(s) == 0) return out;
  out.entries_ = a.entries_;
  for (auto& e : out.entries_) e.value *= s;
  return out;
}

bool operator==(const SparseEndo& a, const SparseEndo& b) {
  if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

SparseEndo commutator(const SparseEndo& a, const SparseEndo& b) { return a * b - b * a; }

}  // namespace vhs
