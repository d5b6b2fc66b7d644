#include "acx/matrix.hpp"

#include "acx/errors.hpp"

namespace acx {

Matrix Matrix::identity(uint32_t k) {
  Matrix m(k, k);
  for (uint32_t i = 0; i < k; ++i) m.at(i, i) = Scalar::one();
  return m;
}

Matrix Matrix::conj() const {
  Matrix out(rows_, cols_);
  for (uint32_t i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i].conj();
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (uint32_t r = 0; r < rows_; ++r)
    for (uint32_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(Errc::Internal, "matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (uint32_t r = 0; r < a.rows_; ++r)
    for (uint32_t k = 0; k < a.cols_; ++k) {
      const Scalar& av = a.at(r, k);
      if (av.is_zero()) continue;
      for (uint32_t c = 0; c < b.cols_; ++c) out.at(r, c) += av * b.at(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::Internal, "matrix shape mismatch");
  Matrix out = a;
  for (uint32_t i = 0; i < a.rows_ * a.cols_; ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::Internal, "matrix shape mismatch");
  Matrix out = a;
  for (uint32_t i = 0; i < a.rows_ * a.cols_; ++i) out.data_[i] -= b.data_[i];
  return out;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) fail(Errc::Internal, "det of non-square matrix");
  Matrix m = *this;
  Scalar d = Scalar::one();
  for (uint32_t col = 0; col < cols_; ++col) {
    uint32_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return Scalar::zero();
    if (pivot != col) {
      for (uint32_t c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (uint32_t r = col + 1; r < rows_; ++r) {
      Scalar f = m.at(r, col) * inv;
      if (f.is_zero()) continue;
      for (uint32_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(Errc::Internal, "inverse of non-square matrix");
  Matrix m = *this;
  Matrix inv = identity(rows_);
  for (uint32_t col = 0; col < cols_; ++col) {
    uint32_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) fail(Errc::SingularTransition, "matrix is singular (det = 0)");
    if (pivot != col) {
      for (uint32_t c = 0; c < cols_; ++c) {
        std::swap(m.at(pivot, c), m.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    Scalar f = m.at(col, col).inverse();
    for (uint32_t c = 0; c < cols_; ++c) {
      m.at(col, c) *= f;
      inv.at(col, c) *= f;
    }
    for (uint32_t r = 0; r < rows_; ++r) {
      if (r == col) continue;
      Scalar g = m.at(r, col);
      if (g.is_zero()) continue;
      for (uint32_t c = 0; c < cols_; ++c) {
        m.at(r, c) -= g * m.at(col, c);
        inv.at(r, c) -= g * inv.at(col, c);
      }
    }
  }
  return inv;
}

std::vector<uint32_t> Matrix::rref() {
  std::vector<uint32_t> pivots;
  uint32_t row = 0;
  for (uint32_t col = 0; col < cols_ && row < rows_; ++col) {
    uint32_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (uint32_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
    Scalar f = at(row, col).inverse();
    for (uint32_t c = 0; c < cols_; ++c) at(row, c) *= f;
    for (uint32_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      Scalar g = at(r, col);
      if (g.is_zero()) continue;
      for (uint32_t c = 0; c < cols_; ++c) at(r, c) -= g * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

uint32_t Matrix::rank() const {
  Matrix m = *this;
  return static_cast<uint32_t>(m.rref().size());
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<uint32_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (uint32_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (uint32_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols_);
    v[f] = Scalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<uint32_t>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace acx
