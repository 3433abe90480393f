#include "qs3/verifier.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace qs3::verifier {

using geometry::ProductPoint;
using geometry::ProductStructure;
using geometry::TangentVector;
using geometry::VectorField;

double SampleStream::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;          // [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

double SampleStream::dyadic_unit() { return static_cast<double>(eng_() >> 32) * 0x1.0p-32; }

ProductPoint SampleStream::point(const ProductStructure& s) {
  std::vector<double> sp(s.sphere_ambient_dim());
  double q = 0.0;
  do {
    q = 0.0;
    for (auto& v : sp) {
      v = gaussian();
      q += v * v;
    }
  } while (q < 1e-12);
  const double r = std::sqrt(q);
  for (auto& v : sp) v /= r;
  std::vector<double> t(s.torus_dim());
  for (auto& v : t) v = dyadic_unit();
  return {std::move(sp), std::move(t)};
}

TangentVector SampleStream::unit_tangent(const ProductStructure& s, const ProductPoint& p) {
  TangentVector v{std::vector<double>(s.sphere_ambient_dim()), std::vector<double>(s.torus_dim())};
  double n = 0.0;
  do {
    for (auto& c : v.sphere) c = gaussian();
    for (auto& c : v.torus) c = gaussian();
    for (int pass = 0; pass < 2; ++pass) {
      double radial = 0.0;
      for (size_t i = 0; i < v.sphere.size(); ++i) radial += v.sphere[i] * p.sphere[i];
      for (size_t i = 0; i < v.sphere.size(); ++i) v.sphere[i] -= radial * p.sphere[i];
    }
    n = geometry::norm(v);
  } while (n < 1e-6);
  return (1.0 / n) * v;
}

double CheckResult::max_residual() const {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.max_residual);
  return worst;
}

namespace {

constexpr int kEvenPerms[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

struct RowAccum {
  std::string identity;
  double worst = 0.0;

  explicit RowAccum(std::string id) : identity(std::move(id)) {}
  void note(double r) { worst = std::max(worst, std::abs(r)); }
  CheckRow done(double tol) const { return {identity, worst, worst <= tol, false}; }
};

void finish(CheckResult& res) {
  res.passed = std::all_of(res.rows.begin(), res.rows.end(),
                           [](const CheckRow& r) { return r.passed && !r.indeterminate; });
}

// Singular-value rank with a guard band: sigma is nonzero iff
// sigma > tol * sigma_max; anything in [tol * s_max, 10 * tol * s_max] is
// ambiguous and poisons the decision.
struct SvRank {
  int rank = 0;
  bool indeterminate = false;
  double gap_ratio = std::numeric_limits<double>::infinity();
};

SvRank sv_rank(const Eigen::VectorXd& sv, double tol) {
  SvRank out;
  if (sv.size() == 0) return out;
  const double smax = sv(0);
  if (smax == 0.0) return out;  // zero matrix: rank 0, unambiguous
  const double lo = tol * smax, hi = 10.0 * tol * smax;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > hi)
      ++out.rank;
    else if (sv(i) >= lo)
      out.indeterminate = true;
  }
  if (out.rank > 0 && out.rank < sv.size()) {
    const double discarded = sv(out.rank);
    out.gap_ratio = discarded > 0.0 ? sv(out.rank - 1) / discarded : std::numeric_limits<double>::infinity();
  }
  return out;
}

double finite_or_cap(double x) { return std::isfinite(x) ? x : 1e300; }

}  // namespace

CheckResult check_almost_contact(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  RowAccum r_phi2("phi_a^2 X = -X + eta_a(X) xi_a");
  RowAccum r_eta_xi("eta_a(xi_a) = 1");
  RowAccum r_compat("g(phi_a X, phi_a Y) = g(X,Y) - eta_a(X) eta_a(Y)");

  for (int n = 0; n < cfg.samples; ++n) {
    const ProductPoint p = rng.point(s);
    const TangentVector x = rng.unit_tangent(s, p);
    const TangentVector y = rng.unit_tangent(s, p);
    for (int a = 1; a <= 3; ++a) {
      const TangentVector xi = s.sphere_reeb(a, p);
      const TangentVector px = s.phi(a, p, x);
      const TangentVector ppx = s.phi(a, p, px);
      const double eta_x = s.eta(a, p, x);
      r_phi2.note(geometry::norm(ppx + x - eta_x * xi));
      r_eta_xi.note(s.eta(a, p, xi) - 1.0);
      const TangentVector py = s.phi(a, p, y);
      r_compat.note(s.metric(p, px, py) - (s.metric(p, x, y) - eta_x * s.eta(a, p, y)));
    }
  }

  CheckResult res;
  res.name = "almost_contact_metric";
  res.statement = "each (phi_a, xi_a, eta_a, g) is an almost contact metric structure";
  res.rows = {r_phi2.done(cfg.tol), r_eta_xi.done(cfg.tol), r_compat.done(cfg.tol)};
  finish(res);
  return res;
}

CheckResult check_3_structure(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  RowAccum r_phi("phi_c = phi_a phi_b - eta_b (x) xi_a = -phi_b phi_a + eta_a (x) xi_b");
  RowAccum r_xi("xi_c = phi_a xi_b = -phi_b xi_a");
  RowAccum r_eta("eta_c = eta_a o phi_b = -eta_b o phi_a");
  RowAccum r_delta("eta_a(xi_b) = delta_ab");

  for (int n = 0; n < cfg.samples; ++n) {
    const ProductPoint p = rng.point(s);
    const TangentVector x = rng.unit_tangent(s, p);
    for (const auto& perm : kEvenPerms) {
      const int a = perm[0], b = perm[1], c = perm[2];
      const TangentVector xi_a = s.sphere_reeb(a, p);
      const TangentVector xi_b = s.sphere_reeb(b, p);
      const TangentVector xi_c = s.sphere_reeb(c, p);
      const TangentVector pc_x = s.phi(c, p, x);

      r_phi.note(geometry::norm(s.phi(a, p, s.phi(b, p, x)) - s.eta(b, p, x) * xi_a - pc_x));
      r_phi.note(geometry::norm(-1.0 * s.phi(b, p, s.phi(a, p, x)) + s.eta(a, p, x) * xi_b - pc_x));
      r_xi.note(geometry::norm(s.phi(a, p, xi_b) - xi_c));
      r_xi.note(geometry::norm(s.phi(b, p, xi_a) + xi_c));
      r_eta.note(s.eta(a, p, s.phi(b, p, x)) - s.eta(c, p, x));
      r_eta.note(s.eta(b, p, s.phi(a, p, x)) + s.eta(c, p, x));
    }
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        r_delta.note(s.eta(a, p, s.sphere_reeb(b, p)) - (a == b ? 1.0 : 0.0));
  }

  CheckResult res;
  res.name = "three_structure_relations";
  res.statement = "the three structures satisfy the quaternionic compatibility relations";
  res.rows = {r_phi.done(cfg.tol), r_xi.done(cfg.tol), r_eta.done(cfg.tol), r_delta.done(cfg.tol)};
  finish(res);
  return res;
}

CheckResult check_closedness_and_normality(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  RowAccum r_dphi("d Phi_a = 0 on recipe triples");
  RowAccum r_n_generic("N_a = 0 on generic recipe pairs");
  RowAccum r_n_torus("N_a = 0 on torus-only pairs");
  RowAccum r_n_mixed("N_a = 0 on mixed sphere/torus pairs");

  for (int n = 0; n < cfg.samples; ++n) {
    const ProductPoint p = rng.point(s);
    const auto sample_field = [&](bool keep_sphere, bool keep_torus) {
      TangentVector v = rng.unit_tangent(s, p);
      if (!keep_sphere) std::fill(v.sphere.begin(), v.sphere.end(), 0.0);
      if (!keep_torus) std::fill(v.torus.begin(), v.torus.end(), 0.0);
      return VectorField::constant_projection(v.sphere, v.torus);
    };

    const VectorField x = sample_field(true, true);
    const VectorField y = sample_field(true, true);
    const VectorField z = VectorField::phi_of(1 + (n % 3), sample_field(true, true));
    const VectorField u = sample_field(false, true);
    const VectorField v = sample_field(false, true);
    const VectorField h = sample_field(true, false);

    for (int a = 1; a <= 3; ++a) {
      r_dphi.note(s.d_two_form(a, p, x, y, z));
      r_dphi.note(s.d_two_form(a, p, x, u, v));
      r_n_generic.note(geometry::norm(s.nijenhuis(a, p, x, y)));
      r_n_generic.note(geometry::norm(s.nijenhuis(a, p, y, z)));
      r_n_torus.note(geometry::norm(s.nijenhuis(a, p, u, v)));
      r_n_mixed.note(geometry::norm(s.nijenhuis(a, p, h, u)));
    }
  }

  CheckResult res;
  res.name = "closedness_and_normality";
  res.statement = "the fundamental 2-forms are closed and the normality tensor vanishes";
  res.rows = {r_dphi.done(cfg.tol), r_n_generic.done(cfg.tol), r_n_torus.done(cfg.tol),
              r_n_mixed.done(cfg.tol)};
  finish(res);
  return res;
}

CheckResult check_rank(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  const int expected = 4 * cfg.l + 2;
  RowAccum r_rank("rank d eta_a = 4l + 2 at every sample (residual = rank deviation)");
  bool indeterminate = false;
  double min_gap = std::numeric_limits<double>::infinity();

  for (int n = 0; n < cfg.samples; ++n) {
    const ProductPoint p = rng.point(s);
    const geometry::StructureFrame fr = s.structure_frame(p);
    for (int a = 0; a < 3; ++a) {
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(fr.d_eta[a]);
      const SvRank r = sv_rank(svd.singularValues(), cfg.tol);
      if (r.indeterminate) indeterminate = true;
      r_rank.note(static_cast<double>(r.rank - expected));
      min_gap = std::min(min_gap, r.gap_ratio);
    }
  }

  CheckRow rank_row = r_rank.done(0.0);
  rank_row.indeterminate = indeterminate;
  if (indeterminate) rank_row.passed = false;
  const double inv_gap = min_gap > 0.0 ? 1.0 / min_gap : std::numeric_limits<double>::infinity();
  const CheckRow gap_row{"singular value gap ratio >= 1e6 (residual = 1/ratio)", finite_or_cap(inv_gap),
                         inv_gap <= 1e-6, false};

  CheckResult res;
  res.name = "blair_rank";
  res.statement = "each d eta_a has rank 4l + 2, so the structures have rank 4l + 3";
  res.rows = {rank_row, gap_row};
  res.measured["min_gap_ratio"] = finite_or_cap(min_gap);
  res.measured["expected_rank"] = static_cast<double>(expected);
  finish(res);
  return res;
}

CheckResult check_E4m(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  const int n = s.dim();
  RowAccum r_dim("dim { X horizontal : i_X d eta_a = 0, a = 1..3 } = 4m (residual = deviation)");
  RowAccum r_inv("the joint kernel is phi_a-invariant");
  RowAccum r_torus("torus directions lie in the joint kernel");
  bool indeterminate = false;

  for (int iter = 0; iter < cfg.samples; ++iter) {
    const ProductPoint p = rng.point(s);
    const geometry::StructureFrame fr = s.structure_frame(p);

    Eigen::MatrixXd b(3 + 3 * n, n);
    for (int a = 0; a < 3; ++a) b.row(a) = fr.eta[a].transpose();
    for (int a = 0; a < 3; ++a) b.block(3 + a * n, 0, n, n) = fr.d_eta[a];

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinV);
    const SvRank r = sv_rank(svd.singularValues(), cfg.tol);
    if (r.indeterminate) indeterminate = true;
    const int kdim = n - r.rank;
    r_dim.note(static_cast<double>(kdim - s.torus_dim()));

    if (kdim > 0 && kdim <= n - r.rank) {
      const Eigen::MatrixXd kernel = svd.matrixV().rightCols(kdim);
      for (int a = 0; a < 3; ++a)
        for (int c = 0; c < kdim; ++c) {
          const Eigen::VectorXd w = fr.phi[a] * kernel.col(c);
          const double wn = w.norm();
          r_inv.note((w - kernel * (kernel.transpose() * w)).norm() / std::max(1.0, wn));
        }
    }
    for (int j = 0; j < s.torus_dim(); ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e(3 + 4 * cfg.l + j) = 1.0;
      r_torus.note((b * e).norm());
    }
  }

  CheckRow dim_row = r_dim.done(0.0);
  dim_row.indeterminate = indeterminate;
  if (indeterminate) dim_row.passed = false;

  CheckResult res;
  res.name = "distribution_E4m";
  res.statement = "the horizontal directions annihilating every d eta_a form a phi-invariant 4m-plane";
  res.measured["expected_dim"] = static_cast<double>(s.torus_dim());
  res.rows = {dim_row, r_inv.done(cfg.tol), r_torus.done(cfg.tol)};
  finish(res);
  return res;
}

CheckResult measure_reeb_constant(const VerifyConfig& cfg, double spread_tol) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  RowAccum r_col("[xi_a, xi_b] is collinear with xi_c on even permutations");
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = -std::numeric_limits<double>::infinity();
  double c_sum = 0.0;
  int c_count = 0;

  for (int n = 0; n < cfg.samples; ++n) {
    const ProductPoint p = rng.point(s);
    for (const auto& perm : kEvenPerms) {
      const TangentVector br = s.lie_bracket(p, VectorField::reeb(perm[0]), VectorField::reeb(perm[1]));
      const TangentVector xi_c = s.sphere_reeb(perm[2], p);
      const double c = geometry::dot(br, xi_c);
      r_col.note(geometry::norm(br - c * xi_c));
      c_min = std::min(c_min, c);
      c_max = std::max(c_max, c);
      c_sum += c;
      ++c_count;
    }
  }

  const double mean = c_sum / c_count;
  const double spread = c_max - c_min;
  const CheckRow spread_row{"one constant across samples and permutations (residual = spread)", spread,
                            spread <= spread_tol, false};
  const CheckRow size_row{"|c| > 0.1 (residual = shortfall)", std::max(0.0, 0.1 - std::abs(mean)),
                          std::abs(mean) > 0.1, false};

  CheckResult res;
  res.name = "reeb_commutator_constant";
  res.statement = "[xi_a, xi_b] = c xi_c with one nonzero constant c";
  res.rows = {r_col.done(cfg.tol), spread_row, size_row};
  res.measured["c_mean"] = mean;
  res.measured["c_min"] = c_min;
  res.measured["c_max"] = c_max;
  res.measured["c_spread"] = spread;
  finish(res);
  return res;
}

CheckResult check_action(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  SampleStream rng(cfg.seed);
  RowAccum r_iso("the generator is an isometry");
  RowAccum r_phi("d(f,h) phi_a = phi_a d(f,h)");
  RowAccum r_xi("d(f,h) xi_a = xi_a");
  RowAccum r_eta("eta_a pulls back to eta_a");
  RowAccum r_order("(f,h)^4 = id exactly on sampled points");

  for (int n = 0; n < cfg.samples; ++n) {
    const ProductPoint p = rng.point(s);
    const TangentVector x = rng.unit_tangent(s, p);
    const TangentVector y = rng.unit_tangent(s, p);
    const ProductPoint q = s.action_diag(1, p);
    const TangentVector dx = s.pushforward_diag(x);
    const TangentVector dy = s.pushforward_diag(y);

    r_iso.note(s.metric(q, dx, dy) - s.metric(p, x, y));
    for (int a = 1; a <= 3; ++a) {
      r_phi.note(geometry::norm(s.phi(a, q, dx) - s.pushforward_diag(s.phi(a, p, x))));
      r_xi.note(geometry::norm(s.sphere_reeb(a, q) - s.pushforward_diag(s.sphere_reeb(a, p))));
      r_eta.note(s.eta(a, q, dx) - s.eta(a, p, x));
    }

    const ProductPoint p4 = s.action_diag(4, p);
    double worst = 0.0;
    for (size_t i = 0; i < p.sphere.size(); ++i) worst = std::max(worst, std::abs(p4.sphere[i] - p.sphere[i]));
    for (size_t i = 0; i < p.torus.size(); ++i) worst = std::max(worst, std::abs(p4.torus[i] - p.torus[i]));
    r_order.note(worst);
  }

  CheckResult res;
  res.name = "action_compatibility";
  res.statement = "the Z4 generator preserves the metric and all three structures, with exact order 4";
  const CheckRow order_row{r_order.identity, r_order.worst, r_order.worst == 0.0, false};
  res.rows = {r_iso.done(cfg.tol), r_phi.done(cfg.tol), r_xi.done(cfg.tol), r_eta.done(cfg.tol), order_row};
  finish(res);
  return res;
}

CheckResult check_freeness(const VerifyConfig& cfg) {
  const ProductStructure s(cfg.l, cfg.m, cfg.fault);
  const int blocks = cfg.l + 1;
  const quat::UnitQuat i{+1, 1};

  CheckResult res;
  res.name = "action_freeness";
  res.statement = "only the identity element fixes a point: nonzero certificates on the sphere factor";

  bool all_nonzero = true;
  int zero_count = 0;
  for (int k = 1; k <= 3; ++k) {
    const Matrix<Int> rm = quat::right_mult_matrix(quat::unit_pow(i, k), blocks);
    const Int det = bareiss_determinant(rm - Matrix<Int>::identity(4 * blocks));
    if (det == 0) {
      all_nonzero = false;
      ++zero_count;
    }
    res.certificates["det(R_{i^" + std::to_string(k) + "} - Id)"] = det.str();
  }

  // h alone fixes the torus origin, so freeness of the product action is
  // decided entirely on the sphere factor.
  const std::vector<double> base = [&] {
    std::vector<double> b(s.sphere_ambient_dim(), 0.0);
    b[0] = 1.0;
    return b;
  }();
  const ProductPoint origin{base, std::vector<double>(s.torus_dim(), 0.0)};
  const ProductPoint h_origin = s.action_h(origin);
  double fix_res = 0.0;
  for (size_t j = 0; j < h_origin.torus.size(); ++j)
    fix_res = std::max(fix_res, std::abs(h_origin.torus[j] - origin.torus[j]));

  const CheckRow det_row{"det(R_{i^k} - Id) != 0 for k = 1, 2, 3 (residual = #zero dets)",
                         static_cast<double>(zero_count), all_nonzero, false};
  const CheckRow fix_row{"h fixes the torus origin exactly", fix_res, fix_res == 0.0, false};
  res.rows = {det_row, fix_row};
  finish(res);
  return res;
}

VerificationReport run_all(const VerifyConfig& cfg) {
  VerificationReport report;
  report.config = cfg;
  report.checks.push_back(check_almost_contact(cfg));
  report.checks.push_back(check_3_structure(cfg));
  report.checks.push_back(check_closedness_and_normality(cfg));
  report.checks.push_back(check_rank(cfg));
  report.checks.push_back(check_E4m(cfg));
  report.checks.push_back(measure_reeb_constant(cfg));
  report.checks.push_back(check_action(cfg));
  report.checks.push_back(check_freeness(cfg));
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  return report;
}

namespace {

const char* fault_name(geometry::Fault f) {
  switch (f) {
    case geometry::Fault::None: return "none";
    case geometry::Fault::FlipPhiFirstTorusCoord: return "flip_phi_first_torus_coord";
  }
  return "unknown";
}

}  // namespace

nlohmann::json report_json(const VerificationReport& report) {
  const VerifyConfig& cfg = report.config;
  nlohmann::json j;
  j["schema"] = "qs3.verification/1";
  j["params"] = {{"l", cfg.l},          {"m", cfg.m},     {"samples", cfg.samples},
                 {"seed", cfg.seed},    {"tol", cfg.tol}, {"fault", fault_name(cfg.fault)}};
  j["space"] = {{"dim", 4 * (cfg.l + cfg.m) + 3},
                {"sphere_dim", 4 * cfg.l + 3},
                {"torus_dim", 4 * cfg.m}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["statement"] = c.statement;
    jc["passed"] = c.passed;
    jc["max_residual"] = c.max_residual();
    jc["rows"] = nlohmann::json::array();
    for (const auto& r : c.rows)
      jc["rows"].push_back({{"identity", r.identity},
                            {"max_residual", r.max_residual},
                            {"passed", r.passed},
                            {"indeterminate", r.indeterminate}});
    jc["certificates"] = c.certificates;
    jc["measured"] = c.measured;
    j["checks"].push_back(jc);
  }
  j["passed"] = report.passed;
  return j;
}

std::string render_text(const VerificationReport& report) {
  const VerifyConfig& cfg = report.config;
  std::ostringstream os;
  char buf[64];

  os << "3-quasi-Sasakian structure verification: (S^" << 4 * cfg.l + 3 << " x T^" << 4 * cfg.m
     << ") / Z4, dim " << 4 * (cfg.l + cfg.m) + 3 << "\n";
  os << "l=" << cfg.l << " m=" << cfg.m << " samples=" << cfg.samples << " seed=" << cfg.seed
     << " tol=" << cfg.tol;
  if (cfg.fault != geometry::Fault::None) os << " fault=" << fault_name(cfg.fault);
  os << "\n\n";

  int passed_count = 0;
  for (const auto& c : report.checks) {
    if (c.passed) ++passed_count;
    std::snprintf(buf, sizeof(buf), "%.3e", c.max_residual());
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  (max residual " << buf << ")\n";
    os << "       " << c.statement << "\n";
    for (const auto& r : c.rows) {
      std::snprintf(buf, sizeof(buf), "%.3e", r.max_residual);
      os << "       " << (r.passed ? "ok   " : (r.indeterminate ? "indet" : "FAIL ")) << " " << r.identity
         << "  [" << buf << "]\n";
    }
    for (const auto& [key, value] : c.certificates) os << "       cert  " << key << " = " << value << "\n";
    for (const auto& [key, value] : c.measured) {
      std::snprintf(buf, sizeof(buf), "%.12g", value);
      os << "       meas  " << key << " = " << buf << "\n";
    }
  }
  os << "\nresult: " << (report.passed ? "PASS" : "FAIL") << " (" << passed_count << "/"
     << report.checks.size() << " checks)\n";
  return os.str();
}

}  // namespace qs3::verifier
