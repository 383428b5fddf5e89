#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "downup/scalar.hpp"

namespace downup {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free elimination: rows are combined as
/// pivot * row - entry * pivot_row, never dividing.
std::size_t rank(Matrix m);

inline Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(r, c));
    for (std::size_t row = r + 1; row < m.rows(); ++row) {
      const Scalar factor = m(row, col);
      if (is_zero(factor)) continue;
      const Scalar p = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = p * m(row, c) - factor * m(r, c);
    }
    ++r;
  }
  return r;
}

}  // namespace downup
