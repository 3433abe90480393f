#include "qs3/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qs3/cohomology.hpp"
#include "qs3/obstruction.hpp"
#include "qs3/verifier.hpp"

namespace qs3::cli {

namespace {

using nlohmann::json;

// Reports either go to stdout or, byte for byte the same, to --out.
int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot open output file: " << path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

json betti_json(int l, int m) {
  const auto betti = cohomology::quotient_betti(l, m);
  json jb = json::array();
  Int euler(0);
  for (size_t k = 0; k < betti.size(); ++k) {
    jb.push_back(betti[k].str());
    euler += (k % 2 == 0) ? betti[k] : -betti[k];
  }
  return json{{"schema", "qs3.betti/1"},
              {"l", l},
              {"m", m},
              {"dim", 4 * (l + m) + 3},
              {"betti", jb},
              {"euler_characteristic", euler.str()}};
}

std::string comma_list(const std::vector<Int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

int do_betti(int l, int m, const std::string& format, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
  if (format == "json") return emit(betti_json(l, m).dump(2) + "\n", out_path, out, err);
  std::ostringstream os;
  os << "betti numbers of (S^" << 4 * l + 3 << " x T^" << 4 * m << ")/Z4 over Q:\n";
  os << comma_list(cohomology::quotient_betti(l, m)) << "\n";
  return emit(os.str(), out_path, out, err);
}

int do_poincare(int l, int m, const std::string& format, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const poly::IntPolynomial p = cohomology::poincare_polynomial(l, m);
  const auto [sphere, torus] = cohomology::poincare_factors(l, m);
  const bool factored_ok = p == sphere * torus;

  if (format == "json") {
    json jc = json::array();
    for (const Int& c : p.coeffs()) jc.push_back(c.str());
    const json j{{"schema", "qs3.poincare/1"},
                 {"l", l},
                 {"m", m},
                 {"poincare", p.to_string()},
                 {"coefficients", jc},
                 {"factor_sphere", sphere.to_string()},
                 {"factor_torus_invariants", torus.to_string()},
                 {"factorization_checked", factored_ok}};
    return emit(j.dump(2) + "\n", out_path, out, err);
  }

  std::ostringstream os;
  os << "P(t) = " << p.to_string() << "\n";
  os << "     = (" << sphere.to_string() << ") * (" << torus.to_string() << ")"
     << (factored_ok ? "" : "   [FACTORIZATION MISMATCH]") << "\n";
  return emit(os.str(), out_path, out, err);
}

int do_obstruction(int l, int m, const std::string& format, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
  if (m != 1) {
    err << "obstruction: only m = 1 is supported; the candidate list enumerates compact "
           "hyperkaehler 4-manifolds (K3, T^4) and no analogous classification is wired in for 4m > 4\n";
    return 2;
  }
  const poly::IntPolynomial p = cohomology::poincare_polynomial(l, m);
  const int dim_sasakian = 4 * l + 3;
  const auto result =
      obstruction::nonproduct_obstruction(p, dim_sasakian, obstruction::dimension4_candidates());
  const bool not_product = result.verdict == obstruction::Verdict::NotProduct;

  if (format == "json") {
    json jw = json::array();
    for (const auto& w : result.witnesses) {
      json e{{"candidate", w.label}, {"contradicted", w.contradicted}};
      if (w.contradicted) {
        e["witness_degree"] = w.witness_degree;
        e["required"] = w.required.str();
        e["actual"] = w.actual.str();
      }
      jw.push_back(e);
    }
    const json j{{"schema", "qs3.obstruction/1"},
                 {"l", l},
                 {"m", m},
                 {"poincare", p.to_string()},
                 {"sasakian_factor_dim", dim_sasakian},
                 {"witnesses", jw},
                 {"verdict", not_product ? "NOT_PRODUCT" : "INCONCLUSIVE"},
                 {"extrapolated", l != 1}};
    const int rc = emit(j.dump(2) + "\n", out_path, out, err);
    return rc != 0 ? rc : (not_product ? 0 : 1);
  }

  std::ostringstream os;
  os << "manifold: (S^" << dim_sasakian << " x T^4)/Z4, P(t) = " << p.to_string() << "\n";
  os << "question: does it split as P^" << dim_sasakian << " x Q^4 with Q compact hyperkaehler?\n";
  for (const auto& w : result.witnesses) {
    os << "candidate " << w.label << ": ";
    if (w.contradicted)
      os << "contradicted at degree " << w.witness_degree << " (product needs b_" << w.witness_degree
         << " >= " << w.required << ", manifold has " << w.actual << ")\n";
    else
      os << "not contradicted by Betti numbers\n";
  }
  os << "verdict: " << (not_product ? "NOT_PRODUCT" : "INCONCLUSIVE") << "\n";
  if (l != 1) os << "note: l != 1 extrapolates beyond the numerically verified case\n";
  const int rc = emit(os.str(), out_path, out, err);
  return rc != 0 ? rc : (not_product ? 0 : 1);
}

int do_verify(const verifier::VerifyConfig& cfg, const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const verifier::VerificationReport report = verifier::run_all(cfg);
  const std::string text =
      format == "json" ? verifier::report_json(report).dump(2) + "\n" : verifier::render_text(report);
  const int rc = emit(text, out_path, out, err);
  return rc != 0 ? rc : (report.passed ? 0 : 1);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-quasi-Sasakian structures on (S^{4l+3} x T^{4m})/Z4: numerical verification "
               "and exact cohomology"};
  app.name("qs3");
  app.require_subcommand(1);

  verifier::VerifyConfig vcfg;
  std::string fault = "none";
  struct Common {
    int l = 1, m = 1;
    std::string format = "text", out_path;
  };
  Common cb, cp, co;
  std::string vformat = "text", vout_path;

  auto* verify = app.add_subcommand("verify", "run the seeded verification suite at random points");
  verify->add_option("-l,--sphere", vcfg.l, "sphere parameter l >= 1 (S^{4l+3})")
      ->default_val(1)
      ->check(CLI::Range(1, 4));
  verify->add_option("-m,--torus", vcfg.m, "torus parameter m >= 1 (T^{4m})")
      ->default_val(1)
      ->check(CLI::Range(1, 4));
  verify->add_option("-n,--samples", vcfg.samples, "number of sample points")
      ->default_val(64)
      ->check(CLI::Range(1, 100000));
  verify->add_option("-s,--seed", vcfg.seed, "RNG seed")->default_val(42);
  verify->add_option("-t,--tol", vcfg.tol, "residual tolerance")
      ->default_val(1e-9)
      ->check(CLI::PositiveNumber);
  verify->add_option("--fault", fault, "inject a deliberate defect to prove checks can fail")
      ->default_val("none")
      ->check(CLI::IsMember({"none", "flip_phi_first_torus_coord"}));
  verify->add_option("--format", vformat, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vout_path, "write the report to a file instead of stdout");

  const auto add_cohomology_opts = [](CLI::App* cmd, Common& c, int max_l, int max_m) {
    cmd->add_option("-l,--sphere", c.l, "sphere parameter l >= 1")->default_val(1)->check(CLI::Range(1, max_l));
    cmd->add_option("-m,--torus", c.m, "torus parameter m >= 1")->default_val(1)->check(CLI::Range(1, max_m));
    cmd->add_option("--format", c.format, "text or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", c.out_path, "write the report to a file instead of stdout");
  };

  auto* betti = app.add_subcommand("betti", "rational Betti numbers of the quotient (exact)");
  add_cohomology_opts(betti, cb, 8, 3);
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial and its factorization (exact)");
  add_cohomology_opts(poincare, cp, 8, 3);
  auto* obstr = app.add_subcommand(
      "obstruction", "Betti-number obstruction to a 3-Sasakian x hyperkaehler product splitting");
  add_cohomology_opts(obstr, co, 8, 3);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      vcfg.fault = fault == "none" ? geometry::Fault::None : geometry::Fault::FlipPhiFirstTorusCoord;
      return do_verify(vcfg, vformat, vout_path, out, err);
    }
    if (betti->parsed()) return do_betti(cb.l, cb.m, cb.format, cb.out_path, out, err);
    if (poincare->parsed()) return do_poincare(cp.l, cp.m, cp.format, cp.out_path, out, err);
    if (obstr->parsed()) return do_obstruction(co.l, co.m, co.format, co.out_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace qs3::cli
