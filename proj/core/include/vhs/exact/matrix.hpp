#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  Vec col_vec(std::size_t c) const;

  Mat transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Matrix with the given columns, in order.
  Mat select_columns(const std::vector<std::size_t>& cols) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Scalar& s, const Mat& a);
Vec operator*(const Mat& a, const Vec& v);

/// Stack matrices with equal column counts vertically.
Mat vstack(const std::vector<Mat>& parts);

/// Rank over the rationals.
std::size_t rank(const Mat& m);

/// Reduced row echelon form; pivots are the first nonzero column of each row.
struct Rref {
  Mat form;                          ///< rank() nonzero rows followed by zero rows removed
  std::vector<std::size_t> pivots;   ///< pivot column of each row, increasing
};
Rref rref(const Mat& m);

}  // namespace vhs
