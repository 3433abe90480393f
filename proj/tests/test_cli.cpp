#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qs3/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qs3::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("betti text output is the exact list") {
  const auto r = run({"betti"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("1,0,4,0,1,0,0,1,0,4,0,1\n") != std::string::npos);

  const auto r21 = run({"betti", "-l", "2"});
  CHECK(r21.code == 0);
  CHECK(r21.out.find("1,0,4,0,1,0,0,0,0,0,0,1,0,4,0,1\n") != std::string::npos);
}

TEST_CASE("betti json carries exact strings and a zero Euler characteristic") {
  const auto r = run({"betti", "--format", "json", "-m", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == "qs3.betti/1");
  CHECK(j.at("l") == 1);
  CHECK(j.at("m") == 2);
  CHECK(j.at("dim") == 15);
  const std::vector<std::string> expect{"1", "0", "16", "0", "38", "0", "16", "1",
                                        "1", "16", "0", "38", "0", "16", "0", "1"};
  CHECK(j.at("betti").get<std::vector<std::string>>() == expect);
  CHECK(j.at("euler_characteristic") == "0");
}

TEST_CASE("poincare output and factorization") {
  const auto r = run({"poincare"});
  CHECK(r.code == 0);
  CHECK(r.out.find("P(t) = 1 + 4t^2 + t^4 + t^7 + 4t^9 + t^11") != std::string::npos);
  CHECK(r.out.find("(1 + t^7) * (1 + 4t^2 + t^4)") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  const auto j = nlohmann::json::parse(run({"poincare", "--format", "json"}).out);
  CHECK(j.at("schema") == "qs3.poincare/1");
  CHECK(j.at("factor_sphere") == "1 + t^7");
  CHECK(j.at("factor_torus_invariants") == "1 + 4t^2 + t^4");
  CHECK(j.at("factorization_checked") == true);
  CHECK(j.at("coefficients").get<std::vector<std::string>>() ==
        std::vector<std::string>{"1", "0", "4", "0", "1", "0", "0", "1", "0", "4", "0", "1"});
}

TEST_CASE("obstruction: NOT_PRODUCT with both witnesses, exit 0") {
  const auto r = run({"obstruction"});
  CHECK(r.code == 0);
  CHECK(r.out.find("candidate K3: contradicted at degree 2 (product needs b_2 >= 22, manifold has 4)") !=
        std::string::npos);
  CHECK(r.out.find("candidate T^4: contradicted at degree 1 (product needs b_1 >= 4, manifold has 0)") !=
        std::string::npos);
  CHECK(r.out.find("verdict: NOT_PRODUCT") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"obstruction", "--format", "json"}).out);
  CHECK(j.at("schema") == "qs3.obstruction/1");
  CHECK(j.at("verdict") == "NOT_PRODUCT");
  CHECK(j.at("extrapolated") == false);
  REQUIRE(j.at("witnesses").size() == 2);
  CHECK(j.at("witnesses")[0].at("candidate") == "K3");
  CHECK(j.at("witnesses")[0].at("witness_degree") == 2);
  CHECK(j.at("witnesses")[0].at("required") == "22");
  CHECK(j.at("witnesses")[1].at("witness_degree") == 1);
}

TEST_CASE("obstruction guards its domain") {
  const auto r = run({"obstruction", "-m", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("only m = 1") != std::string::npos);

  const auto r2 = run({"obstruction", "-l", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("extrapolates") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"obstruction", "-l", "2", "--format", "json"}).out);
  CHECK(j.at("extrapolated") == true);
}

TEST_CASE("verify: exit codes track the report") {
  const auto ok = run({"verify", "-n", "8"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("result: PASS (8/8 checks)") != std::string::npos);

  const auto faulty = run({"verify", "-n", "8", "--fault", "flip_phi_first_torus_coord"});
  CHECK(faulty.code == 1);
  CHECK(faulty.out.find("result: FAIL") != std::string::npos);

  const auto tight = run({"verify", "-n", "8", "--tol", "1e-30"});
  CHECK(tight.code == 1);
}

TEST_CASE("verify json is deterministic and well formed") {
  const auto a = run({"verify", "-n", "8", "--format", "json"});
  const auto b = run({"verify", "-n", "8", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("schema") == "qs3.verification/1");
  CHECK(j.at("passed") == true);
  CHECK(j.at("params").at("samples") == 8);
  CHECK(j.at("checks").size() == 8);

  const auto seeded = run({"verify", "-n", "8", "--format", "json", "-s", "7"});
  CHECK(nlohmann::json::parse(seeded.out).at("params").at("seed") == 7);
  CHECK(seeded.out != a.out);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "qs3_cli_test_out.json").string();
  const auto direct = run({"betti", "--format", "json"});
  const auto filed = run({"betti", "--format", "json", "--out", path});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == direct.out);
  std::remove(path.c_str());

  const auto bad = run({"betti", "--out", "/nonexistent_dir_zz/x.txt"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({"verify", "-l", "0"}).code == 2);
  CHECK(run({"verify", "-l", "9"}).code == 2);
  CHECK(run({"verify", "--tol", "-1"}).code == 2);
  CHECK(run({"verify", "--fault", "nonsense"}).code == 2);
  CHECK(run({"betti", "-m", "4"}).code == 2);

  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(help.out.find("betti") != std::string::npos);
  const auto vhelp = run({"verify", "--help"});
  CHECK(vhelp.code == 0);
  CHECK(vhelp.out.find("--fault") != std::string::npos);
}
