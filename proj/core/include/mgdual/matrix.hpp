#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mgdual/rational.hpp"

namespace mgdual {

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row; the first row fixes the width of an empty 0x0 matrix.
  void append_row(std::span<const Rational> values);
  void append_rows(const Matrix& other);
  void swap_rows(std::size_t a, std::size_t b);
  void truncate_rows(std::size_t n);

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with zero rows dropped. Pivots are chosen as the
/// leftmost nonzero column, first nonzero row at or below the current one.
Matrix rref(Matrix m);
/// In-place variant that also reports the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(const Matrix& m);

/// RREF basis (as rows) of the right null space {x : m*x = 0}.
Matrix kernel_basis(const Matrix& m);

}  // namespace mgdual
