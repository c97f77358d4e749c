#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <sstream>

#include <json.hpp>

#include "xrj/cli_run.hpp"
#include "xrj/rat.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
  json out_json() const { return json::parse(out); }
  json err_json() const { return json::parse(err); }
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = xrj::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("polynomial coefficients as exact strings") {
  RunResult r = run_cli({"jacobi", "1", "0", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "[\"0\",\"1\"]\n");
  r = run_cli({"jacobi", "2", "1/2", "-3/2"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j.is_array());
  CHECK(j.size() == 3);
}

TEST_CASE("exceptional polynomial output") {
  RunResult r = run_cli({"xmjacobi", "1", "1", "4", "1"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["degree"] == 2);
  CHECK(j["leading"] == "-35/8");
  CHECK(j["coeffs"].size() == 3);
}

TEST_CASE("spectrum fields") {
  RunResult r = run_cli({"spectrum", "11/2", "1/2"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["v_max"] == 2);
  CHECK(j["energies"] == json::array({"-15", "-3", "1"}));
  CHECK(j["marginal_top"] == true);
  CHECK(j["empty"] == false);

  r = run_cli({"spectrum", "1", "2"});
  CHECK(r.out_json()["empty"] == true);

  r = run_cli({"--csv", "spectrum", "11/2", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("v,energy_prime,energy\n", 0) == 0);
  CHECK(r.out.find("0,-15,-16") != std::string::npos);
}

TEST_CASE("zeros verdict and exit code") {
  RunResult r = run_cli({"zeros", "1", "1", "4", "1"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["left"] == 1);
  CHECK(j["inside"] == 1);
  CHECK(j["right"] == 0);
  CHECK(j["pass"] == true);
}

TEST_CASE("classification output") {
  RunResult r = run_cli({"classify", "-", "+", "-1", "5", "11/2", "1/2"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["type"] == "a'");
  CHECK(j["energy_prime"] == "-35");
  CHECK(j["energy"] == "-36");

  // unlisted sign triple -> precondition error with a typed diagnostic
  r = run_cli({"classify", "+", "+", "+1", "0", "11/2", "1/2"});
  CHECK(r.code == 2);
  CHECK(r.err_json()["error"] == "NoSuchType");
}

TEST_CASE("deformed family polynomial") {
  RunResult r = run_cli({"xr", "a", "1", "0", "11/2", "1/2"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["degree"] == 1);
  CHECK(j["kappa"] == json::array({0, 1}));
  r = run_cli({"xr", "q", "1", "0", "11/2", "1/2"});
  CHECK(r.code == 2);
  CHECK(r.err_json()["error"] == "RangeViolation");
}

TEST_CASE("verification subcommands succeed") {
  RunResult r = run_cli({"identities", "--nmax", "5", "--samples", "4"});
  CHECK(r.code == 0);
  CHECK(r.out_json()["pass"] == true);

  r = run_cli({"residuals", "pfr"});
  CHECK(r.code == 0);
  CHECK(r.out_json()["pass"] == true);

  r = run_cli({"residuals", "nonsense"});
  CHECK(r.code == 2);

  r = run_cli({"cross-ortho", "11/2", "1/2", "1", "0", "1"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["pass"] == true);
  CHECK(j["pairs"].size() == 1);
}

TEST_CASE("gram output") {
  RunResult r = run_cli({"gram", "a", "1", "11/2", "1/2"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["levels"] == json::array({0, 1}));
  CHECK(j["max_offdiag"].get<double>() < 1e-8);

  r = run_cli({"--csv", "gram", "a", "1", "11/2", "1/2"});
  CHECK(r.out.rfind("i,j,v_i,v_j,raw,normalized\n", 0) == 0);
}

TEST_CASE("potential subcommand") {
  RunResult r = run_cli({"potential", "11/2", "1/2"});
  CHECK(r.code == 0);
  json j = r.out_json();
  CHECK(j["analytic_energies"] == json::array({"-16", "-4", "0"}));
  CHECK(j["deformed"] == false);

  r = run_cli({"potential", "11/2", "1/2", "--seed", "a,1"});
  CHECK(r.code == 0);
  CHECK(r.out_json()["deformed"] == true);

  // unusable seed surfaces as a precondition error
  r = run_cli({"potential", "11/2", "1/2", "--seed", "b,0"});
  CHECK(r.code == 2);
  CHECK(r.err_json()["error"] == "AdmissibilityError");
}

TEST_CASE("usage errors") {
  RunResult r = run_cli({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err_json()["error"] == "usage");
  r = run_cli({"jacobi", "1", "0"});
  CHECK(r.code == 2);
  r = run_cli({"jacobi", "1", "0", "not-a-rational"});
  CHECK(r.code == 2);
  r = run_cli({});
  CHECK(r.code == 2);
}

TEST_CASE("batch mode consumes line-delimited requests") {
  std::istringstream feed(
      "[\"jacobi\",\"1\",\"0\",\"0\"]\n"
      "[\"spectrum\",\"11/2\",\"1/2\"]\n"
      "[\"classify\",\"+\",\"+\",\"+1\",\"0\",\"11/2\",\"1/2\"]\n");
  std::streambuf* saved = std::cin.rdbuf(feed.rdbuf());
  RunResult r = run_cli({"batch"});
  std::cin.rdbuf(saved);
  CHECK(r.code == 2);  // worst exit among the lines
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  json j1 = json::parse(line);
  CHECK(j1["exit"] == 0);
  CHECK(j1["result"] == json::array({"0", "1"}));
  std::getline(lines, line);
  json j2 = json::parse(line);
  CHECK(j2["result"]["v_max"] == 2);
  std::getline(lines, line);
  json j3 = json::parse(line);
  CHECK(j3["exit"] == 2);
  CHECK(j3["stderr"]["error"] == "NoSuchType");
}

TEST_CASE("rationals round-trip through the string format") {
  for (const char* s : {"-35/8", "1", "0", "11/2", "-7"}) {
    xrj::Rat r = xrj::rat_from_string(s);
    CHECK(xrj::to_string(r) == s);
  }
}
