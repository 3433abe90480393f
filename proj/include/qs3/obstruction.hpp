#pragma once

#include <string>
#include <vector>

#include "qs3/polynomial.hpp"

namespace qs3::obstruction {

// A hypothetical compact factor Q^{4m} in a product decomposition
// P^{4l+3} x Q^{4m}, carried by its Poincare polynomial.
struct CandidateFactor {
  std::string label;
  poly::IntPolynomial poincare;
};

// The two candidates relevant in real dimension 4: a K3 surface and the
// 4-torus. Any compact hyperkaehler 4-manifold is one of the two.
CandidateFactor k3_candidate();
CandidateFactor torus4_candidate();
std::vector<CandidateFactor> dimension4_candidates();

enum class Verdict {
  NotProduct,     // every candidate is contradicted by a witness coefficient
  Inconclusive,   // some candidate survives the Betti comparison
};

struct CandidateWitness {
  std::string label;
  bool contradicted = false;
  // Lowest degree where the hypothetical product needs more cohomology than
  // the manifold has; meaningful only when contradicted.
  int witness_degree = -1;
  Int required;  // coefficient forced by the product hypothesis
  Int actual;    // coefficient of the manifold
};

struct ObstructionResult {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CandidateWitness> witnesses;
};

// Tests whether a space with Poincare polynomial `p` can be a product
// P^{dim_sasakian} x Q with P a compact factor contributing (1 + t^{dim_sasakian})
// and Q one of the candidates. A candidate is contradicted when some
// coefficient of (1 + t^{dim_sasakian}) * candidate exceeds the matching
// coefficient of p; NotProduct needs every candidate contradicted.
// Never claims a product exists.
ObstructionResult nonproduct_obstruction(const poly::IntPolynomial& p, int dim_sasakian,
                                         const std::vector<CandidateFactor>& candidates);

}  // namespace qs3::obstruction
