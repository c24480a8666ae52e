#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Arithmetic modulo the Mersenne prime p = 2^61 - 1.
namespace modp {

inline constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  const std::uint64_t r = static_cast<std::uint64_t>(x & kP) + static_cast<std::uint64_t>(x >> 61);
  return r >= kP ? r - kP : r;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
std::uint64_t power(std::uint64_t a, std::uint64_t e);
std::uint64_t inverse(std::uint64_t a);
/// Image of a rational number; throws PreconditionError when p divides the denominator.
std::uint64_t reduce(const Scalar& s);

}  // namespace modp

/// Reduced row echelon form over F_p with dense rows. A rank computed here is a lower bound
/// for the rank over Q of the same integral matrix.
class ModEchelon {
 public:
  explicit ModEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const;
  bool contains(const std::vector<std::uint64_t>& v) const;
  /// Returns true when v was independent of the stored rows.
  bool insert(const std::vector<std::uint64_t>& v);

 private:
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace vhs
