#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Element of the exterior algebra over Q on generators xi_1..xi_N and their formal
/// conjugates. A monomial is a bitmask: bit i < N is xi_{i+1}, bit N + i is its conjugate.
class Form {
 public:
  static constexpr std::size_t kMaxGenerators = 6;

  Form() = default;
  explicit Form(std::size_t n);
  Form(std::size_t n, const Scalar& c);

  static Form xi(std::size_t n, std::size_t i);
  static Form xi_bar(std::size_t n, std::size_t i);

  std::size_t generators() const { return n_; }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of a homogeneous nonzero form; -1 for zero, -2 for mixed degrees.
  int degree() const;
  Scalar coefficient(std::uint32_t monomial) const;
  /// Substitutes xi <-> xi_bar.
  Form conj() const;
  std::string to_string() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= Scalar(-1); }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  /// Wedge product.
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void add_term(std::uint32_t m, const Scalar& c);
  std::size_t n_ = 0;
  std::map<std::uint32_t, Scalar> terms_;
};

/// Sign of the monomial a wedge b with a, b disjoint bitmasks.
int wedge_sign(std::uint32_t a, std::uint32_t b);

/// Matrix with entries in the exterior algebra, all homogeneous of one declared degree.
class FormMat {
 public:
  FormMat() = default;
  FormMat(std::size_t rows, std::size_t cols, int degree, std::size_t generators);
  static FormMat from_scalar(const Mat& m, std::size_t generators);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int degree() const { return degree_; }
  std::size_t generators() const { return n_; }

  const Form& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Throws PreconditionError if f is nonzero and not homogeneous of the declared degree.
  void set(std::size_t r, std::size_t c, Form f);
  void add(std::size_t r, std::size_t c, const Form& f);

  bool is_zero() const;
  FormMat transpose() const;
  FormMat conj() const;
  /// Transpose of the conjugate.
  FormMat conj_transpose() const { return conj().transpose(); }
  FormMat operator-() const;

  friend FormMat operator*(const FormMat& a, const FormMat& b);
  friend FormMat operator+(const FormMat& a, const FormMat& b);
  friend bool operator==(const FormMat& a, const FormMat& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  int degree_ = 0;
  std::size_t n_ = 0;
  std::vector<Form> data_;
};

FormMat block_diag(const FormMat& a, const FormMat& b);

}  // namespace vhs
