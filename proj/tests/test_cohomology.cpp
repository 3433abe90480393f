#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qs3/cohomology.hpp"

using namespace qs3;
using namespace qs3::cohomology;

namespace {

RationalMatrix rational_identity(int n) {
  RationalMatrix id(n, n, Rational(0));
  for (int i = 0; i < n; ++i) id(i, i) = Rational(1);
  return id;
}

RationalMatrix random_rational(std::mt19937_64& eng, int n) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RationalMatrix m(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(num(eng), den(eng));
  return m;
}

// The frozen induced map on H^1(T^4): right multiplication by i, transposed.
RationalMatrix frozen_a() {
  return RationalMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}

Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Character-theoretic oracle for the fixed-space dimension of a matrix of
// order dividing 4: dim = (tr W^0 + tr W + tr W^2 + tr W^3) / 4.
Rational trace_average(const RationalMatrix& w) {
  Rational acc(0);
  RationalMatrix p = rational_identity(w.rows());
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < w.rows(); ++i) acc += p(i, i);
    p = p * w;
  }
  return acc / 4;
}

}  // namespace

TEST_CASE("k_subsets: counts, order, degenerate cases") {
  const auto s = k_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == std::vector<int>{0, 1});
  CHECK(s[1] == std::vector<int>{0, 2});
  CHECK(s[2] == std::vector<int>{0, 3});
  CHECK(s[3] == std::vector<int>{1, 2});
  CHECK(s[4] == std::vector<int>{1, 3});
  CHECK(s[5] == std::vector<int>{2, 3});
  CHECK(k_subsets(5, 0) == std::vector<std::vector<int>>{{}});
  CHECK(k_subsets(3, 3).size() == 1);
  CHECK(k_subsets(6, 3).size() == 20);
  CHECK_THROWS_AS((void)k_subsets(3, 4), std::invalid_argument);
}

TEST_CASE("exterior power is functorial and normalizes correctly") {
  std::mt19937_64 eng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;  // 2, 3, 4
    const int k = trial % (n + 1);
    const RationalMatrix a = random_rational(eng, n);
    const RationalMatrix b = random_rational(eng, n);
    CHECK(exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k));
  }
  for (int n : {2, 3, 4})
    for (int k = 0; k <= n; ++k)
      CHECK(exterior_power(rational_identity(n), k) == rational_identity(static_cast<int>(binomial(n, k).convert_to<long>())));
  // Top power is the determinant.
  const RationalMatrix m = random_rational(eng, 4);
  const RationalMatrix top = exterior_power(m, 4);
  REQUIRE(top.rows() == 1);
  CHECK(top(0, 0) == determinant(m));
  CHECK(exterior_power(m, 1) == m);
}

TEST_CASE("induced generator on H^1 is the frozen matrix") {
  const RationalMatrix a = induced_h_star(1);
  CHECK(a == frozen_a());
  CHECK(induced_h_star(2) == block_diag<Rational>({frozen_a(), frozen_a()}));
  CHECK_THROWS_AS((void)induced_h_star(0), std::invalid_argument);
}

TEST_CASE("the frozen generator squares to -Id and has order four") {
  const RationalMatrix a = frozen_a();
  const RationalMatrix id = rational_identity(4);
  CHECK(pow(a, 2) == -id);
  CHECK(pow(a, 4) == id);
  CHECK(pow(a, 2) != id);

  const auto cp = characteristic_polynomial(a);
  // (t^2 + 1)^2 = 1 + 2 t^2 + t^4, ascending coefficients.
  REQUIRE(cp.size() == 5);
  CHECK(cp[0] == Rational(1));
  CHECK(cp[1] == Rational(0));
  CHECK(cp[2] == Rational(2));
  CHECK(cp[3] == Rational(0));
  CHECK(cp[4] == Rational(1));
}

TEST_CASE("Lambda^2 of the generator diagonalizes in the symmetrized basis") {
  // Lexicographic wedge basis: e01, e02, e03, e12, e13, e23.
  // Symmetrized basis: e01, e02+e13, e02-e13, e03+e12, e03-e12, e23 with
  // eigenvalues 1, -1, 1, 1, -1, 1.
  const RationalMatrix w = exterior_power(frozen_a(), 2);
  RationalMatrix s(6, 6, Rational(0));
  s(0, 0) = 1;                  // e01
  s(1, 1) = 1; s(4, 1) = 1;     // e02 + e13
  s(1, 2) = 1; s(4, 2) = -1;    // e02 - e13
  s(2, 3) = 1; s(3, 3) = 1;     // e03 + e12
  s(2, 4) = 1; s(3, 4) = -1;    // e03 - e12
  s(5, 5) = 1;                  // e23
  RationalMatrix d(6, 6, Rational(0));
  const int eig[6] = {1, -1, 1, 1, -1, 1};
  for (int i = 0; i < 6; ++i) d(i, i) = eig[i];
  CHECK(w * s == s * d);
  // Four +1 eigenvalues: the invariant dimension in degree 2.
  CHECK(invariant_dimension(frozen_a(), 2) == 4);
}

TEST_CASE("invariant dimensions: dual paths agree and match the trace oracle") {
  const RationalMatrix a = frozen_a();
  for (int k = 0; k <= 4; ++k) {
    const int lib = invariant_dimension(a, k);  // throws if kernel and averaging disagree
    CHECK(Rational(lib) == trace_average(exterior_power(a, k)));
    CHECK(invariant_dimension_by_kernel(a, k) == lib);
    CHECK(invariant_dimension_by_averaging(a, k) == lib);
  }
  const RationalMatrix a2 = induced_h_star(2);
  for (int k = 0; k <= 8; ++k)
    CHECK(Rational(invariant_dimension(a2, k)) == trace_average(exterior_power(a2, k)));

  // Identity fixes everything: dimensions are plain binomials.
  for (int k = 0; k <= 4; ++k)
    CHECK(invariant_dimension(rational_identity(4), k) == binomial(4, k));

  CHECK_THROWS_AS((void)invariant_dimension(RationalMatrix(2, 2, Rational(2)), 1),
                  std::invalid_argument);
}

TEST_CASE("torus invariant dimensions are the frozen lists") {
  CHECK(torus_invariant_dimensions(1) == std::vector<Int>{1, 0, 4, 0, 1});
  CHECK(torus_invariant_dimensions(2) == std::vector<Int>{1, 0, 16, 0, 38, 0, 16, 0, 1});
}

TEST_CASE("sphere cohomology signs are +1 in the relevant dimensions") {
  for (int l : {0, 1, 2}) {
    const auto [s0, stop] = sphere_action_on_cohomology(l);
    CHECK(s0 == 1);
    CHECK(stop == 1);
  }
}

TEST_CASE("quotient Betti numbers for the reference spaces") {
  CHECK(quotient_betti(1, 1) == std::vector<Int>{1, 0, 4, 0, 1, 0, 0, 1, 0, 4, 0, 1});
  CHECK(quotient_betti(1, 2) ==
        std::vector<Int>{1, 0, 16, 0, 38, 0, 16, 1, 1, 16, 0, 38, 0, 16, 0, 1});
  CHECK(quotient_betti(2, 1) ==
        std::vector<Int>{1, 0, 4, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 4, 0, 1});
  CHECK_THROWS_AS((void)quotient_betti(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)quotient_betti(1, 0), std::invalid_argument);
}

TEST_CASE("Poincare duality and connectedness hold for every computed list") {
  for (const auto& [l, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {3, 1}}) {
    const auto b = quotient_betti(l, m);
    const size_t dim = static_cast<size_t>(4 * (l + m) + 3);
    REQUIRE(b.size() == dim + 1);
    CHECK(b[0] == 1);
    CHECK(b[1] == 0);  // the quotient is simply rationally connected in degree 1
    for (size_t k = 0; k <= dim; ++k) CHECK(b[k] == b[dim - k]);
  }
}

TEST_CASE("Poincare polynomial and its factorization") {
  CHECK(poincare_polynomial(1, 1).to_string() == "1 + 4t^2 + t^4 + t^7 + 4t^9 + t^11");
  for (const auto& [l, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    const auto [sphere_factor, torus_factor] = poincare_factors(l, m);
    CHECK(sphere_factor == poly::IntPolynomial::one() + poly::IntPolynomial::monomial(4 * l + 3));
    CHECK(sphere_factor * torus_factor == poincare_polynomial(l, m));
    const auto btilde = torus_invariant_dimensions(m);
    for (size_t j = 0; j < btilde.size(); ++j) CHECK(torus_factor.coeff(static_cast<int>(j)) == btilde[j]);
  }
}
