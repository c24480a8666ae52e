#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vhs/exact/scalar.hpp"

namespace vhs {

using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);
std::size_t binomial(std::size_t n, std::size_t k);

/// All exponent vectors of total degree k in lexicographic order, largest first (x_1^k first).
std::vector<Monomial> monomial_basis(std::size_t num_vars, int k);

/// Polynomial over Q in num_vars variables.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t num_vars) : n_(num_vars) {}
  static Poly monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static Poly variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return n_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a nonzero homogeneous polynomial; -1 for zero, -2 if not homogeneous.
  int degree() const;
  bool is_homogeneous() const { return degree() != -2; }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);
  Poly derivative(std::size_t i) const;
  /// Sets the listed variables to zero and drops them, keeping the others in order.
  Poly restrict_to_zero(const std::vector<std::size_t>& vars) const;
  std::string to_string() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void check_vars(const Poly& o) const;
  std::size_t n_ = 0;
  std::map<Monomial, Scalar> terms_;
};

/// Reads one term per line, `coeff e1 ... ek`; blank lines and lines starting with '#' are skipped.
/// Coefficients are integers or fractions p/q. Throws PreconditionError on malformed input.
Poly read_poly(std::istream& in);
Poly parse_poly(const std::string& text);
void write_poly(std::ostream& out, const Poly& p);
std::string format_poly(const Poly& p);

}  // namespace vhs
