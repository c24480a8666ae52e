#include "vhs/exact/modular.hpp"

#include "vhs/error.hpp"

namespace vhs {

namespace modp {

std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

std::uint64_t inverse(std::uint64_t a) {
  if (a == 0) throw PreconditionError("zero has no inverse modulo p");
  return power(a, kP - 2);
}

std::uint64_t reduce(const Scalar& s) {
  auto residue = [](const mpz_class& z) { return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), kP)); };
  const std::uint64_t den = residue(s.get_den());
  if (den == 0) throw PreconditionError("denominator divisible by the modulus");
  return mul(residue(s.get_num()), inverse(den));
}

}  // namespace modp

std::vector<std::uint64_t> ModEchelon::reduce(std::vector<std::uint64_t> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint64_t f = v[pivots_[r]];
    if (f == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t k = 0; k < cols_; ++k)
      if (row[k] != 0) v[k] = modp::sub(v[k], modp::mul(f, row[k]));
  }
  return v;
}

bool ModEchelon::contains(const std::vector<std::uint64_t>& v) const {
  for (auto x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool ModEchelon::insert(const std::vector<std::uint64_t>& v) {
  auto w = reduce(v);
  std::size_t piv = 0;
  while (piv < cols_ && w[piv] == 0) ++piv;
  if (piv == cols_) return false;
  const std::uint64_t inv = modp::inverse(w[piv]);
  for (auto& x : w) x = modp::mul(x, inv);
  for (auto& row : rows_) {
    const std::uint64_t f = row[piv];
    if (f == 0) continue;
    for (std::size_t k = 0; k < cols_; ++k)
      if (w[k] != 0) row[k] = modp::sub(row[k], modp::mul(f, w[k]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

}  // namespace vhs
