#include "qs3/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qs3::poly {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::one() { return IntPolynomial({Int(1)}); }

IntPolynomial IntPolynomial::monomial(int degree, Int coeff) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Int> c(static_cast<size_t>(degree) + 1, Int(0));
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(int d) const {
  static const Int zero(0);
  if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(d)];
}

bool IntPolynomial::nonnegative() const {
  for (const Int& c : c_)
    if (c < 0) return false;
  return true;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Int> c(std::max(p.c_.size(), q.c_.size()), Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial();
  std::vector<Int> c(p.c_.size() + q.c_.size() - 1, Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t d = 0; d < c_.size(); ++d) {
    const Int& c = c_[d];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Int a = abs(c);
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

namespace {

void require_nonnegative(const IntPolynomial& p, const char* side) {
  if (!p.nonnegative())
    throw std::invalid_argument(std::string("coefficient-wise order needs nonnegative coefficients (") +
                                side + " operand has a negative one)");
}

}  // namespace

bool poly_leq(const IntPolynomial& p, const IntPolynomial& q) {
  require_nonnegative(p, "left");
  require_nonnegative(q, "right");
  const int top = std::max(p.degree(), q.degree());
  for (int d = 0; d <= top; ++d)
    if (p.coeff(d) > q.coeff(d)) return false;
  return true;
}

bool poly_lt(const IntPolynomial& p, const IntPolynomial& q) { return poly_leq(p, q) && !(p == q); }

}  // namespace qs3::poly
