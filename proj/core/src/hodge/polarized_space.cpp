#include "vhs/hodge/polarized_space.hpp"

#include "vhs/error.hpp"

namespace vhs {

PolarizedSpace::PolarizedSpace(HodgeNumbers h, MiddleForm middle) : h_(std::move(h)), middle_(middle) {
  const int n = h_.weight();
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::size_t acc = 0;
  for (int p = n; p >= 0; --p) {
    offset_[static_cast<std::size_t>(p)] = acc;
    acc += h_.level_dim(p);
  }
}

std::size_t PolarizedSpace::index(int p, std::size_t a) const {
  if (p < 0 || p > weight() || a >= level_dim(p)) throw PreconditionError("basis label out of range");
  return offset_[static_cast<std::size_t>(p)] + a;
}

int PolarizedSpace::level_of(std::size_t i) const {
  for (int p = weight(); p >= 0; --p) {
    const std::size_t off = offset_[static_cast<std::size_t>(p)];
    if (i >= off && i < off + level_dim(p)) return p;
  }
  throw PreconditionError("index out of range");
}

int PolarizedSpace::sign(int p) const {
  const int n = weight();
  if (n % 2 == 0) return 1;
  return 2 * p > n ? 1 : -1;
}

std::size_t PolarizedSpace::partner(int p, std::size_t a) const {
  const int n = weight();
  if (2 * p != n || middle_ == MiddleForm::Diagonal) return a;
  const std::size_t half = level_dim(p) / 2;
  if (a < half) return a + half;
  if (a < 2 * half) return a - half;
  return a;
}

Scalar PolarizedSpace::pairing(std::size_t i, std::size_t j) const {
  const int p = level_of(i);
  const int q = level_of(j);
  if (p + q != weight()) return 0;
  const std::size_t a = i - level_offset(p);
  const std::size_t b = j - level_offset(q);
  return partner(p, a) == b ? Scalar(sign(p)) : Scalar(0);
}

Scalar PolarizedSpace::pairing(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw PreconditionError("pairing: vector length mismatch");
  Scalar acc = 0;
  for (int p = weight(); p >= 0; --p) {
    const int q = weight() - p;
    for (std::size_t a = 0; a < level_dim(p); ++a) {
      const Scalar& x = u[index(p, a)];
      if (sgn(x) == 0) continue;
      const Scalar& y = v[index(q, partner(p, a))];
      if (sgn(y) != 0) acc += sign(p) * x * y;
    }
  }
  return acc;
}

Mat PolarizedSpace::gram() const {
  Mat g(dim(), dim());
  for (int p = weight(); p >= 0; --p)
    for (std::size_t a = 0; a < level_dim(p); ++a) g(index(p, a), index(weight() - p, partner(p, a))) = sign(p);
  return g;
}

}  // namespace vhs
