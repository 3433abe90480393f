#pragma once

#include <cassert>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qs3/exact.hpp"

namespace qs3 {

// Dense row-major matrix over an exact scalar (Int, Rational).
// Sizes here are tiny (a few hundred rows at most); no attempt at sparsity.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& init = T(0))
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, init) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(int n) {
    Matrix e(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = T(1);
    return e;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged row list");
      int j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(int i, int k) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  // Submatrix picking the given rows and columns, in the given order.
  Matrix select(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix s(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return s;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.a_) v = s * v;
    return r;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    assert(static_cast<int>(x.size()) == a.cols_);
    std::vector<T> y(a.rows_, T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (int i = 0; i < m.rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (int j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << (i + 1 == m.rows_ ? "]" : "\n");
    }
    return os;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

template <typename T>
Matrix<T> pow(Matrix<T> base, unsigned e) {
  assert(base.rows() == base.cols());
  Matrix<T> r = Matrix<T>::identity(base.rows());
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

template <typename T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> m(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

// Fraction-free (Bareiss) elimination over Int. Divisions are exact:
// after step k every working entry is a (k+1)-minor of the input.
Int bareiss_determinant(Matrix<Int> m);
int bareiss_rank(Matrix<Int> m);

// Row-wise lcm scaling; preserves rank and kernel.
Matrix<Int> clear_denominators(const Matrix<Rational>& m);

Rational determinant(const Matrix<Rational>& m);
int rank(const Matrix<Rational>& m);
int kernel_dimension(const Matrix<Rational>& m);

Matrix<Rational> to_rational(const Matrix<Int>& m);

}  // namespace qs3
