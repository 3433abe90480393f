#include "qs3/matrix.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qs3 {

Int bareiss_determinant(Matrix<Int> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Int(0);
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

int bareiss_rank(Matrix<Int> m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  Int prev(1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank) m.swap_rows(p, rank);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

Matrix<Int> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Int> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (int j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, Int(denominator(m(i, j))));
    for (int j = 0; j < m.cols(); ++j) {
      const Rational v = m(i, j) * Rational(l);
      assert(denominator(v) == 1);
      out(i, j) = numerator(v);
    }
  }
  return out;
}

Rational determinant(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  // Plain Gaussian elimination; for exact rationals the pivot product is the determinant.
  Matrix<Rational> a = m;
  const int n = a.rows();
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

int rank(const Matrix<Rational>& m) { return bareiss_rank(clear_denominators(m)); }

int kernel_dimension(const Matrix<Rational>& m) { return m.cols() - rank(m); }

Matrix<Rational> to_rational(const Matrix<Int>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace qs3
