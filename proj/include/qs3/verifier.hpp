#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qs3/geometry.hpp"

#include "json.hpp"

namespace qs3::verifier {

struct VerifyConfig {
  int l = 1;
  int m = 1;
  int samples = 64;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  geometry::Fault fault = geometry::Fault::None;
};

// Deterministic sample source. All randomness in the verifier flows through
// one of these, seeded explicitly; reports are reproducible byte for byte.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : eng_(seed) {}

  // Box-Muller on explicit 53-bit uniforms; implementation-pinned so the
  // stream does not depend on library distribution internals.
  double gaussian();
  // k / 2^32 with k uniform. Dyadic, so mod-1 arithmetic on these values is
  // exact and the order-4 action identity holds exactly.
  double dyadic_unit();

  geometry::ProductPoint point(const geometry::ProductStructure& s);
  geometry::TangentVector unit_tangent(const geometry::ProductStructure& s, const geometry::ProductPoint& p);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct CheckRow {
  std::string identity;
  double max_residual = 0.0;
  bool passed = false;
  bool indeterminate = false;
};

struct CheckResult {
  std::string name;
  std::string statement;
  std::vector<CheckRow> rows;
  std::map<std::string, std::string> certificates;  // exact integer payloads, as decimal strings
  std::map<std::string, double> measured;
  bool passed = false;

  double max_residual() const;
};

// Pointwise identities of a single almost contact metric structure:
// phi^2 = -Id + eta (x) xi, eta(xi) = 1, g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y).
CheckResult check_almost_contact(const VerifyConfig& cfg);

// Quaternionic relations tying the three structures together.
CheckResult check_3_structure(const VerifyConfig& cfg);

// d Phi_a = 0 and vanishing of the normality tensor, on recipe fields.
CheckResult check_closedness_and_normality(const VerifyConfig& cfg);

// rank(d eta_a) = 4l+2 pointwise, decided by singular values with a guard
// band: sigma counts as nonzero iff sigma > tol * sigma_max, and any sigma in
// [tol * sigma_max, 10 * tol * sigma_max] marks the point indeterminate.
CheckResult check_rank(const VerifyConfig& cfg);

// E = {X horizontal : i_X d eta_a = 0 for all a} has dimension 4m, is
// phi-invariant, and contains the torus directions.
CheckResult check_E4m(const VerifyConfig& cfg);

// [xi_a, xi_b] = c xi_c on even permutations, one constant across points.
CheckResult measure_reeb_constant(const VerifyConfig& cfg, double spread_tol = 1e-8);

// The Z4 generator preserves g, phi, xi, eta, and has exact order 4.
CheckResult check_action(const VerifyConfig& cfg);

// Exact freeness certificates: det(R_{i^k} - Id) != 0 on the sphere factor
// for k = 1, 2, 3, so only the identity has fixed points on the product.
CheckResult check_freeness(const VerifyConfig& cfg);

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  bool passed = false;
};

VerificationReport run_all(const VerifyConfig& cfg);

nlohmann::json report_json(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

}  // namespace qs3::verifier
