#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "../tools/cli_app.hpp"
#include "inoue/io.hpp"
#include "inoue/search.hpp"

using namespace inoue;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("inoue_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    std::string p = (path / name).string();
    write_file(p, content);
    return p;
  }
};

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = inoue_cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* k_surface_matrix = "3\n0 0 1\n1 0 0\n0 1 1\n";

} // namespace

TEST_CASE("check: accept exits 0, reject exits 1, garbage exits 2") {
  TempDir tmp;
  std::string m0 = tmp.file("M0.txt", k_surface_matrix);
  std::string i3 = tmp.file("I3.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
  std::string bad = tmp.file("bad.txt", "3\n1 2\n");

  CHECK(run_cli({"check", m0}).code == 0);
  auto rejected = run_cli({"check", i3});
  CHECK(rejected.code == 1);
  CHECK(rejected.out.find("real-root-count-not-1") != std::string::npos);
  auto err = run_cli({"check", bad});
  CHECK(err.code == 2);
  CHECK(err.err.find("error") != std::string::npos);
  CHECK(run_cli({"check", (tmp.path / "missing.txt").string()}).code == 2);
}

TEST_CASE("check --json: schema frame and exact echo round-trips") {
  TempDir tmp;
  std::string m0 = tmp.file("M0.txt", k_surface_matrix);
  auto res = run_cli({"check", m0, "--json", "--bits", "128"});
  REQUIRE(res.code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["command"] == "check");
  CHECK(j["parameters"]["bits"] == 128);
  // The echoed matrix re-parses to the identical matrix.
  IntMatrix echoed = matrix_from_json(j["input"]["matrix"]);
  CHECK(echoed == parse_matrix(k_surface_matrix));
  CHECK(j["result"]["accepted"] == true);
  CHECK(j["result"]["n"] == 1);
  // Machine output carries exact dyadic data, never floats.
  CHECK(j["result"]["alpha_enclosure"]["center"].contains("mantissa"));
}

TEST_CASE("matrix inputs are accepted as JSON too") {
  TempDir tmp;
  std::string mj = tmp.file("M.json", "[[0,0,1],[1,0,0],[0,1,1]]");
  CHECK(run_cli({"check", mj}).code == 0);
  std::string pj = tmp.file("P.json", "[\"-1\", \"0\", \"-1\", \"1\"]");
  CHECK(run_cli({"roots", pj}).code == 0);
}

TEST_CASE("polynomial echo in JSON reports re-parses identically") {
  TempDir tmp;
  std::string p = tmp.file("P.txt", "-1 0 -3 1\n");
  auto res = run_cli({"roots", p, "--json", "--bits", "32"});
  REQUIRE(res.code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  IntPoly echoed = poly_from_json(j["input"]["poly"]);
  CHECK(echoed == parse_poly("-1 0 -3 1"));
}

TEST_CASE("classify: exit codes 0 / 1 / 3") {
  TempDir tmp;
  std::string a = tmp.file("A.txt", k_surface_matrix);
  // B = C A C^{-1} for a small unimodular C.
  IntMatrix am = parse_matrix(k_surface_matrix);
  IntMatrix c{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  IntMatrix bm = c * am * inverse_unimodular(c);
  std::string b = tmp.file("B.txt", matrix_to_text(bm));
  std::string distinct = tmp.file("D.txt", "3\n0 0 1\n1 0 0\n0 1 3\n"); // companion of x^3-3x^2-1

  auto homeo = run_cli({"classify", a, b, "--json"});
  CHECK(homeo.code == 0);
  nlohmann::json hj = nlohmann::json::parse(homeo.out);
  CHECK(hj["result"]["verdict"] == "homeomorphic");

  auto not_homeo = run_cli({"classify", a, distinct});
  CHECK(not_homeo.code == 1);

  // Unknown: a zero budget leaves the witness search untouched.
  auto unknown = run_cli({"classify", a, b, "--budget", "0"});
  CHECK(unknown.code == 3);
}

TEST_CASE("invariants and ot emit coherent reports") {
  TempDir tmp;
  std::string m = tmp.file("M.txt", k_surface_matrix);
  auto inv = run_cli({"invariants", m, "--json", "--bits", "64"});
  REQUIRE(inv.code == 0);
  nlohmann::json j = nlohmann::json::parse(inv.out);
  CHECK(j["result"]["homology"]["b1"] == 1);
  CHECK(j["result"]["flags"]["kahler"] == "NO");
  CHECK(j["result"]["flags"]["lck"] == "EXISTS-BY-TRICERRI");

  std::string p = tmp.file("P.txt", "-1 0 -1 1\n");
  auto ot = run_cli({"ot", p, "--bits", "64", "--json"});
  REQUIRE(ot.code == 0);
  nlohmann::json oj = nlohmann::json::parse(ot.out);
  CHECK(oj["result"]["accepted"] == true);
  CHECK(oj["result"]["lattice_matches_u_rows"] == true);

  std::string bad = tmp.file("bad_poly.txt", "1 0 -1 1\n"); // P(0) = +1
  CHECK(run_cli({"ot", bad}).code == 1);
}

TEST_CASE("orbit evaluates words with inverses") {
  TempDir tmp;
  std::string m = tmp.file("M.txt", k_surface_matrix);
  auto res = run_cli({"orbit", m, "--word", "0 1 0^-1", "--bits", "64", "--json"});
  REQUIRE(res.code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["result"].contains("w"));
  auto with_point = run_cli({"orbit", m, "--word", "1", "--point", "0 1 0 0", "--bits", "64"});
  CHECK(with_point.code == 0);
}

TEST_CASE("search writes matrix files that re-validate") {
  TempDir tmp;
  std::string out_dir = (tmp.path / "hits").string();
  auto res = run_cli({"search", "--dim", "3", "--mode", "companion", "--count", "3", "--seed",
                      "42", "--out", out_dir, "--json"});
  REQUIRE(res.code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  REQUIRE(j["result"]["files"].size() == 3);
  for (const auto& f : j["result"]["files"]) {
    auto reread = run_cli({"check", f.get<std::string>()});
    CHECK(reread.code == 0);
  }
}

TEST_CASE("exit code 2 on unknown subcommand or missing arguments") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);
  CHECK(run_cli({}).code == 2);
}
