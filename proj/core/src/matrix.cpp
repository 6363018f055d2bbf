#include "mgdual/matrix.hpp"

#include <utility>

#include "mgdual/error.hpp"

namespace mgdual {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(Errc::DimensionMismatch, "row width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.rows_ == 0) return;
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw Error(Errc::DimensionMismatch, "row width mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) mpq_swap((*this)(a, c).get_mpq_t(), (*this)(b, c).get_mpq_t());
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape");
  Matrix p(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) == 0) continue;
        t = x * b(k, j);
        p(i, j) += t;
      }
    }
  return p;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  Rational t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);

    const Rational inv = 1 / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) == 0) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j : support) {
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

Matrix rref(Matrix m) {
  rref_in_place(m);
  return m;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref_in_place(copy).size();
}

Matrix kernel_basis(const Matrix& m) {
  Matrix reduced = m;
  const std::vector<std::size_t> pivots = rref_in_place(reduced);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix ker(0, n);
  std::vector<Rational> v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    for (auto& x : v) x = 0;
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
    ker.append_row(v);
  }
  rref_in_place(ker);
  return ker;
}

}  // namespace mgdual
