#pragma once

#include <vector>

#include "acx/scalar.hpp"

namespace acx {

/// Dense matrix over the exact complex rationals.  Small sizes only; all
/// elimination is exact Gauss-Jordan over the field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(uint32_t rows, uint32_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(uint32_t k);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  Scalar& at(uint32_t r, uint32_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(uint32_t r, uint32_t c) const { return data_[r * cols_ + c]; }

  Matrix conj() const;
  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Scalar det() const;
  /// Exact inverse; throws SingularTransition when det = 0.
  Matrix inverse() const;

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<uint32_t> rref();
  uint32_t rank() const;
  /// Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<Scalar>> kernel_basis() const;

 private:
  uint32_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace acx
