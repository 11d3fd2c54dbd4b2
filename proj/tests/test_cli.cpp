#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sumur/cli.hpp"
#include "sumur/io.hpp"

using namespace sumur;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "sumur_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("bound: Pauli triple on the theta = 0 qubit state") {
  const auto obs = scratch("pauli.json");
  const auto st = scratch("qubit0.json");
  REQUIRE(run({"export-observables", "--set", "pauli", "--out", obs.string()}).code == 0);
  REQUIRE(run({"export-state", "--family", "qubit-paper", "--theta", "0", "--out", st.string()}).code == 0);
  const auto r = run({"bound", "--observables", obs.string(), "--state", st.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bounds"]["cb1"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(j["bounds"]["tb1"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(j["lhs_variance"].get<double>() == doctest::Approx(2.0));
  CHECK(j["ordering_ok"].get<bool>());

  // Same state in density form through --out.
  const auto rho = scratch("qubit0_rho.json");
  REQUIRE(run({"export-state", "--family", "qubit-paper", "--theta", "0", "--density", "--out", rho.string()}).code == 0);
  const auto report = scratch("report.json");
  REQUIRE(run({"bound", "--observables", obs.string(), "--state", rho.string(), "--out", report.string()}).code == 0);
  std::ifstream in(report);
  CHECK(nlohmann::json::parse(in)["bounds"]["cb1"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("bound: ZZ pair on |0> gives zero pair bounds") {
  const auto obs = scratch("zz.json");
  const auto st = scratch("ket0.json");
  write(obs, R"({"dim": 2, "matrices": [ [[[1,0],[0,0]],[[0,0],[-1,0]]], [[[1,0],[0,0]],[[0,0],[-1,0]]] ]})");
  write(st, R"({"type": "pure", "vector": [[1,0],[0,0]]})");
  const auto r = run({"bound", "--observables", obs.string(), "--state", st.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bounds"]["pair_variance"].get<double>() == 0.0);
  CHECK(j["bounds"]["pair_stddev"].get<double>() == 0.0);
  CHECK(j["bounds"]["robertson"].get<double>() == 0.0);
  CHECK(j["bounds"]["cb1"].is_null());
}

TEST_CASE("bound: invalid input exits 2 with a field diagnostic") {
  const auto obs = scratch("bad.json");
  const auto st = scratch("ket0b.json");
  write(obs, R"({"dim": 2, "matrices": [ [[[0,0],[1,0]],[[1,0],[0,0]]], [[[0,0],[1,0]],[[0,0],[0,0]]] ]})");
  write(st, R"({"type": "pure", "vector": [[1,0],[0,0]]})");
  auto r = run({"bound", "--observables", obs.string(), "--state", st.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("matrices[1]") != std::string::npos);
  r = run({"bound", "--observables", scratch("missing.json").string(), "--state", st.string()});
  CHECK(r.code == 2);
  r = run({"bound", "--observables", obs.string()});
  CHECK(r.code == 2);
  write(obs, R"({"dim": 3, "matrices": [ [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]],
                                          [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]] ]})");
  r = run({"bound", "--observables", obs.string(), "--state", st.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("DimensionMismatch") != std::string::npos);
}

TEST_CASE("sweep: csv output") {
  auto r = run({"sweep", "--family", "qubit-paper", "--kind", "variance", "--points", "1000"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1001);
  CHECK(ls[0] == "theta,lhs,cb_bound,tb_bound");
  CHECK(ls[1] == "0,2,1.5,0.75");

  r = run({"sweep", "--family", "qubit-paper", "--kind", "variance", "--points", "2"});
  CHECK(lines(r.out).size() == 3);
  CHECK(lines(r.out)[2].rfind("3.14159265359,", 0) == 0);

  r = run({"sweep", "--family", "qutrit-paper", "--kind", "stddev", "--points", "10"});
  const auto qutrit_rows = lines(r.out);
  REQUIRE(qutrit_rows.size() == 11);
  for (std::size_t k = 1; k < qutrit_rows.size(); ++k) {
    const auto& row = qutrit_rows[k];
    const double theta = std::stod(row.substr(0, row.find(',')));
    const double tb = std::stod(row.substr(row.rfind(',') + 1));
    CHECK(tb == doctest::Approx(std::sqrt(1 + std::sin(theta) * std::sin(theta))).epsilon(1e-11));
  }

  r = run({"sweep", "--family", "qubit-paper", "--kind", "variance", "--points", "4", "--range", "0", "180",
           "--degrees"});
  CHECK(lines(r.out)[3].rfind("1.57079632679,", 0) == 0);
}

TEST_CASE("sweep: bad flags exit 2") {
  CHECK(run({"sweep", "--family", "ququart", "--kind", "variance"}).code == 2);
  CHECK(run({"sweep", "--family", "qubit-paper", "--kind", "entropy"}).code == 2);
  CHECK(run({"sweep", "--family", "qubit-paper", "--kind", "variance", "--points", "1"}).code == 2);
  CHECK(run({"sweep", "--family", "qubit-paper", "--kind", "variance", "--points", "many"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("saturate") {
  auto r = run({"saturate", "--family", "qubit-paper", "--kind", "stddev", "--bound", "cb3"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "0.615479709");
  CHECK(ls[1] == "1.570796327");
  CHECK(ls[3] == "4.712388980");

  r = run({"saturate", "--family", "qutrit-paper", "--kind", "stddev", "--bound", "cb3"});
  ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "0.000000000");
  CHECK(ls[2] == "3.141592654");

  r = run({"saturate", "--family", "qubit-paper", "--kind", "variance", "--bound", "cb1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  r = run({"saturate", "--family", "qutrit-paper", "--kind", "stddev", "--bound", "cb3", "--range", "45", "135",
           "--degrees"});
  CHECK(r.out == "1.570796327\n");

  CHECK(run({"saturate", "--family", "qubit-paper", "--kind", "variance", "--bound", "cb3"}).code == 2);
  CHECK(run({"saturate", "--family", "qubit-paper", "--kind", "stddev"}).code == 2);
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "--trials", "200", "--seed", "7"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["violation_count"] == 0);
  CHECK(j["properties"].contains("cb1_variance"));
  CHECK(run({"verify", "--trials", "200", "--seed", "7"}).out == r.out);

  r = run({"verify", "--trials", "50", "--tolerance", "1e-30"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["violation_count"].get<int>() > 0);

  r = run({"verify", "--trials", "20", "--dims", "3,5", "--n-obs", "3..4", "--mixed-frac", "1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["config"]["dims"] == nlohmann::json::array({3, 5}));

  CHECK(run({"verify", "--trials", "0"}).code == 2);
  CHECK(run({"verify", "--n-obs", "1..3"}).code == 2);
  CHECK(run({"verify", "--n-obs", "three"}).code == 2);
  CHECK(run({"verify", "--dims", "1"}).code == 2);
  CHECK(run({"verify", "--mixed-frac", "2"}).code == 2);
}

TEST_CASE("exported files re-parse bit-identically") {
  const auto a = scratch("spin1_a.json");
  const auto b = scratch("spin1_b.json");
  REQUIRE(run({"export-observables", "--set", "spin1", "--out", a.string()}).code == 0);
  const auto st = scratch("qutrit.json");
  REQUIRE(run({"export-state", "--family", "qutrit-paper", "--theta", "0.7", "--out", st.string()}).code == 0);
  const auto r = run({"bound", "--observables", a.string(), "--state", st.string()});
  CHECK(r.code == 0);
  // Parse the exported file and write it again: same bytes, same matrices.
  std::ifstream in(a);
  std::stringstream text;
  text << in.rdbuf();
  const auto parsed = parse_observable_file(text.str());
  write(b, observable_file_json(parsed).dump(2) + "\n");
  std::ifstream in_b(b);
  std::stringstream text_b;
  text_b << in_b.rdbuf();
  CHECK(text.str() == text_b.str());
  const auto j = spin1_ops();
  CHECK(parsed.observables[1].matrix() == j.y.matrix());
  CHECK(run({"export-observables", "--set", "tetrahedral"}).code == 2);
}
