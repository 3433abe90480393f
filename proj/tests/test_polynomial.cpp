#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qs3/polynomial.hpp"

using namespace qs3;
using poly::IntPolynomial;
using poly::poly_leq;
using poly::poly_lt;

namespace {

IntPolynomial random_nonneg(std::mt19937_64& eng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> coeff(0, 9);
  std::vector<Int> c(static_cast<size_t>(deg(eng)) + 1);
  for (auto& v : c) v = coeff(eng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("normal form and accessors") {
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial().is_zero());
  CHECK(IntPolynomial({0, 0, 0}).is_zero());
  CHECK(IntPolynomial({1, 0, 0}).degree() == 0);
  CHECK(IntPolynomial({1, 2}).coeff(0) == 1);
  CHECK(IntPolynomial({1, 2}).coeff(1) == 2);
  CHECK(IntPolynomial({1, 2}).coeff(7) == 0);
  CHECK(IntPolynomial({1, 2}).coeff(-1) == 0);
  CHECK(IntPolynomial::one() == IntPolynomial({1}));
  CHECK(IntPolynomial::monomial(3) == IntPolynomial({0, 0, 0, 1}));
  CHECK(IntPolynomial::monomial(0, Int(5)) == IntPolynomial({5}));
  CHECK(IntPolynomial({1, -1}).nonnegative() == false);
  CHECK(IntPolynomial({0, 3}).nonnegative());
}

TEST_CASE("to_string formats") {
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial({1, 0, 4, 0, 1}).to_string() == "1 + 4t^2 + t^4");
  CHECK(IntPolynomial({0, 1}).to_string() == "t");
  CHECK(IntPolynomial({0, 0, 1}).to_string() == "t^2");
  CHECK(IntPolynomial({0, -5}).to_string() == "-5t");
  CHECK(IntPolynomial({-1, 2}).to_string() == "-1 + 2t");
  CHECK(IntPolynomial({3}).to_string() == "3");
}

TEST_CASE("arithmetic identities") {
  const IntPolynomial p({1, 1});         // 1 + t
  const IntPolynomial q({1, -1});        // 1 - t
  CHECK(p * q == IntPolynomial({1, 0, -1}));
  CHECK(p + q == IntPolynomial({2}));
  CHECK(poly::poly_mul(p, q) == p * q);
  CHECK(p * IntPolynomial() == IntPolynomial());
  CHECK(p * IntPolynomial::one() == p);

  // Frozen products used by the obstruction argument.
  const IntPolynomial sphere7 = IntPolynomial::one() + IntPolynomial::monomial(7);
  CHECK(sphere7 * IntPolynomial({1, 0, 22, 0, 1}) ==
        IntPolynomial({1, 0, 22, 0, 1, 0, 0, 1, 0, 22, 0, 1}));
  CHECK(sphere7 * IntPolynomial({1, 4, 6, 4, 1}) ==
        IntPolynomial({1, 4, 6, 4, 1, 0, 0, 1, 4, 6, 4, 1}));
}

TEST_CASE("coefficientwise order: rejection of negatives") {
  CHECK_THROWS_AS((void)poly_leq(IntPolynomial({-1}), IntPolynomial({1})), std::invalid_argument);
  CHECK_THROWS_AS((void)poly_leq(IntPolynomial({1}), IntPolynomial({0, -2})), std::invalid_argument);
  CHECK_THROWS_AS((void)poly_lt(IntPolynomial({-1}), IntPolynomial({1})), std::invalid_argument);
}

TEST_CASE("coefficientwise order laws on random nonnegative polynomials") {
  std::mt19937_64 eng(99);
  int leq_hits = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const IntPolynomial p = random_nonneg(eng);
    const IntPolynomial q = random_nonneg(eng);
    const IntPolynomial r = random_nonneg(eng);

    CHECK(poly_leq(p, p));                      // reflexive
    CHECK_FALSE(poly_lt(p, p));                 // strict is irreflexive
    if (poly_leq(p, q) && poly_leq(q, p)) {     // antisymmetric
      CHECK(p == q);
    }
    if (poly_leq(p, q) && poly_leq(q, r)) {     // transitive
      CHECK(poly_leq(p, r));
      ++leq_hits;
    }
    CHECK(poly_lt(p, q) == (poly_leq(p, q) && !(p == q)));

    // Constructed chains exercise the non-vacuous branches.
    const IntPolynomial q2 = p + r;
    CHECK(poly_leq(p, q2));
    CHECK(poly_leq(q2, q2 + q));
    CHECK(poly_leq(p, q2 + q));
    if (!r.is_zero()) CHECK(poly_lt(p, q2));

    // Monotone under + and * by nonnegative polynomials.
    CHECK(poly_leq(p + r, q2 + r) == poly_leq(p, q2));
    if (!q.is_zero()) CHECK(poly_leq(p * q, q2 * q));
  }
  CHECK(leq_hits > 0);  // the random transitivity premise fired at least once
}

TEST_CASE("order is partial, not total") {
  const IntPolynomial p({2, 0});
  const IntPolynomial q({0, 2});
  CHECK_FALSE(poly_leq(IntPolynomial({2}), q));
  CHECK_FALSE(poly_leq(q, IntPolynomial({2})));
  CHECK(poly_leq(IntPolynomial(), p));  // zero is the bottom element
}
