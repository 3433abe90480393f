#pragma once

#include <string>
#include <vector>

#include "qs3/exact.hpp"

namespace qs3::poly {

// Polynomial in one variable t with exact integer coefficients.
// Normal form: no trailing zero coefficients; the zero polynomial is {}.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial one();
  static IntPolynomial monomial(int degree, Int coeff = Int(1));

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of t^d; zero outside the stored range.
  const Int& coeff(int d) const;
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool nonnegative() const;

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) { return p.c_ == q.c_; }

  // "1 + 4t^2 + t^4"; zero prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> c_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

// Coefficient-wise partial order on polynomials with nonnegative
// coefficients: p <= q iff every coefficient of p is <= the matching
// coefficient of q. Inputs with a negative coefficient are rejected.
bool poly_leq(const IntPolynomial& p, const IntPolynomial& q);
// p < q iff p <= q and p != q.
bool poly_lt(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace qs3::poly
