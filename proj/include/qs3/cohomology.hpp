#pragma once

#include <utility>
#include <vector>

#include "qs3/matrix.hpp"
#include "qs3/polynomial.hpp"

namespace qs3::cohomology {

using RationalMatrix = Matrix<Rational>;

// k-element subsets of {0, ..., n-1} in lexicographic order; this fixes the
// basis order of all exterior powers.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Lambda^k of a linear map: entries are k x k minors, rows and columns
// indexed by k_subsets(n, k). Lambda^0 = (1), Lambda^1 = M.
RationalMatrix exterior_power(const RationalMatrix& m, int k);

// Action of the torus part of the Z4 generator on H^1(T^{4m}): the transpose
// of the ambient map, since 1-cohomology pulls back dually to coordinates.
RationalMatrix induced_h_star(int m);

// dim of the fixed subspace of Lambda^k(M) for a matrix of order dividing 4.
// Computed two ways (kernel of Lambda^k M - Id, and rank of the group
// average); the paths must agree or this throws.
int invariant_dimension(const RationalMatrix& m, int k);
int invariant_dimension_by_kernel(const RationalMatrix& m, int k);
int invariant_dimension_by_averaging(const RationalMatrix& m, int k);

// Monic characteristic polynomial, coefficients ascending in degree
// (Faddeev-LeVerrier, exact rational arithmetic).
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

// Signs of the sphere map on H^0 and H^{4l+3} of S^{4l+3}; the top sign is
// the exact determinant of the ambient right multiplication.
std::pair<int, int> sphere_action_on_cohomology(int l);

// Invariant dimensions of H^j(T^{4m}) under the induced generator, j = 0..4m.
std::vector<Int> torus_invariant_dimensions(int m);

// Betti numbers b_0 .. b_{4(l+m)+3} of (S^{4l+3} x T^{4m}) / Z4 over Q.
std::vector<Int> quotient_betti(int l, int m);

poly::IntPolynomial poincare_polynomial(int l, int m);
// The same polynomial as the product (1 + t^{4l+3}) * sum_j btilde_j t^j.
std::pair<poly::IntPolynomial, poly::IntPolynomial> poincare_factors(int l, int m);

}  // namespace qs3::cohomology
