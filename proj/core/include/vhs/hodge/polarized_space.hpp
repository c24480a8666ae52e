#pragma once

#include <cstddef>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/hodge/hodge_numbers.hpp"

namespace vhs {

/// Shape of Q on the middle level H^{m,m} of an even weight 2m.
enum class MiddleForm {
  Diagonal,  ///< Q(e_{m,a}, e_{m,b}) = delta_{ab}
  Split,     ///< hyperbolic: e_{m,a} pairs with e_{m,a+h} for a < h = floor(k/2); a trailing odd vector pairs with itself
};

/// The space H = sum of levels with basis e_{p,a} and the polarization Q.
///
/// Q(e_{p,a}, e_{n-p,b}) = s(p) [b = pi_p(a)], where s(p) = 1 for even n and
/// s(p) = +1 for p > n/2, -1 for p < n/2 when n is odd. pi_p is the identity
/// except on the middle level, where it is the involution fixed by MiddleForm.
class PolarizedSpace {
 public:
  PolarizedSpace() = default;
  explicit PolarizedSpace(HodgeNumbers h, MiddleForm middle = MiddleForm::Diagonal);

  const HodgeNumbers& hodge() const { return h_; }
  int weight() const { return h_.weight(); }
  MiddleForm middle_form() const { return middle_; }
  std::size_t dim() const { return h_.total_dim(); }

  std::size_t level_dim(int p) const { return h_.level_dim(p); }
  /// Global index of e_{p,a}. Levels are laid out from p = n down to p = 0.
  std::size_t index(int p, std::size_t a) const;
  std::size_t level_offset(int p) const { return offset_[static_cast<std::size_t>(p)]; }
  /// Level of global index i.
  int level_of(std::size_t i) const;

  int sign(int p) const;
  /// Index b at level n-p with Q(e_{p,a}, e_{n-p,b}) != 0.
  std::size_t partner(int p, std::size_t a) const;

  /// Q(e_i, e_j) on global indices.
  Scalar pairing(std::size_t i, std::size_t j) const;
  /// Q(u, v) for coordinate vectors.
  Scalar pairing(const Vec& u, const Vec& v) const;
  /// Gram matrix of Q.
  Mat gram() const;

 private:
  HodgeNumbers h_;
  MiddleForm middle_ = MiddleForm::Diagonal;
  std::vector<std::size_t> offset_;  // offset_[p]
};

}  // namespace vhs
