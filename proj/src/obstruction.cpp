#include "qs3/obstruction.hpp"

#include <stdexcept>

namespace qs3::obstruction {

using poly::IntPolynomial;

CandidateFactor k3_candidate() {
  return {"K3", IntPolynomial({Int(1), Int(0), Int(22), Int(0), Int(1)})};
}

CandidateFactor torus4_candidate() {
  return {"T^4", IntPolynomial({Int(1), Int(4), Int(6), Int(4), Int(1)})};
}

std::vector<CandidateFactor> dimension4_candidates() { return {k3_candidate(), torus4_candidate()}; }

ObstructionResult nonproduct_obstruction(const IntPolynomial& p, int dim_sasakian,
                                         const std::vector<CandidateFactor>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate factors to test");
  if (p.is_zero()) throw std::invalid_argument("Poincare polynomial must be nonzero");
  if (!p.nonnegative()) throw std::invalid_argument("Poincare polynomial has a negative coefficient");
  if (dim_sasakian < 3 || dim_sasakian % 4 != 3)
    throw std::invalid_argument("Sasakian factor dimension must be of the form 4l + 3");

  // A compact factor of dimension 4l + 3 in such a splitting contributes at
  // least 1 + t^{dim} to the Poincare polynomial (connected, orientable), so
  // the product needs at least (1 + t^{dim}) * candidate everywhere.
  const IntPolynomial lower_bound_sasakian =
      IntPolynomial::one() + IntPolynomial::monomial(dim_sasakian);

  ObstructionResult out;
  bool all_contradicted = true;
  for (const auto& cand : candidates) {
    if (!cand.poincare.nonnegative() || cand.poincare.is_zero())
      throw std::invalid_argument("candidate '" + cand.label + "' has an invalid Poincare polynomial");
    const IntPolynomial need = lower_bound_sasakian * cand.poincare;

    CandidateWitness w;
    w.label = cand.label;
    const int top = std::max(need.degree(), p.degree());
    for (int d = 0; d <= top; ++d) {
      if (need.coeff(d) > p.coeff(d)) {
        w.contradicted = true;
        w.witness_degree = d;
        w.required = need.coeff(d);
        w.actual = p.coeff(d);
        break;
      }
    }
    if (!w.contradicted) all_contradicted = false;
    out.witnesses.push_back(std::move(w));
  }
  out.verdict = all_contradicted ? Verdict::NotProduct : Verdict::Inconclusive;
  return out;
}

}  // namespace qs3::obstruction
