#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli.hpp"
#include "graphsep/json_io.hpp"

using namespace graphsep;

namespace {

Json parse_out(const CliResult& res) { return Json::parse(res.out); }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents = "")
      : path("/tmp/graphsep_test_" + name) {
    if (!contents.empty()) std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("exit codes encode the verdict") {
  CHECK(run_cli({"classify", "--builtin", "C4", "--white-noise", "5/13"}).code == 0);
  CHECK(run_cli({"classify", "--builtin", "C4", "--white-noise", "0.3846154"}).code == 1);
  CHECK(run_cli({"classify", "--builtin", "C6", "--white-noise", "27/100"}).code == 2);
}

TEST_CASE("error exit codes: malformed document, invalid state, usage") {
  TempFile bad("bad.json", "not json at all");
  CHECK(run_cli({"classify", "--state", bad.path}).code == 64);
  TempFile unnorm("unnorm.json",
                  R"({"graph":{"n":4,"edges":[[1,2],[2,3],[3,4]]},"lambda":{"++++":"1/3"}})");
  CHECK(run_cli({"classify", "--state", unnorm.path}).code == 65);
  CHECK(run_cli({"frobnicate"}).code == 70);
  CHECK(run_cli({"classify", "--builtin", "NOPE"}).code == 70);
  CHECK(run_cli({"classify", "--builtin", "GHZ7"}).code == 65);  // default qubit cap
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verdict document shape and determinism") {
  std::vector<std::string> args = {"classify", "--builtin", "R5", "--white-noise", "2/5"};
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.out == b.out);  // byte-identical reruns
  Json doc = parse_out(a);
  CHECK(doc["verdict"] == "GME");
  CHECK(doc["threshold"] == "7/19");
  CHECK(doc["witness_valid"] == true);
}

TEST_CASE("threshold subcommand pins the exact family values") {
  CHECK(parse_out(run_cli({"threshold", "--builtin", "C4"}))["threshold"] == "5/13");
  CHECK(parse_out(run_cli({"threshold", "--builtin", "Y5"}))["threshold"] == "9/25");
  CHECK(parse_out(run_cli({"threshold", "--builtin", "R5"}))["threshold"] == "7/19");
  CHECK(parse_out(run_cli({"threshold", "--builtin", "GHZ4"}))["threshold"] == "7/15");
  Json c6 = parse_out(run_cli({"threshold", "--builtin", "C6"}));
  CHECK(c6["bounds"][0] == "11/43");
  CHECK(c6["bounds"][1] == "51/179");
}

TEST_CASE("emitted artifact files re-verify") {
  TempFile wfile("w.json"), dfile("d.json");
  CliResult gme = run_cli({"classify", "--builtin", "C5", "--white-noise", "2/5",
                           "--emit-witness", wfile.path});
  CHECK(gme.code == 1);
  std::ifstream win(wfile.path);
  DiagonalWitness w = witness_from_json(Json::parse(win));
  CHECK(validate_witness(w).valid);
  CHECK(evaluate(w, white_noise(path_graph(5), rational(2, 5))) < 0);

  CliResult bisep = run_cli({"decompose", "--builtin", "Y5", "--white-noise", "9/25",
                             "--emit-decomposition", dfile.path});
  CHECK(bisep.code == 0);
  std::ifstream din(dfile.path);
  Decomposition d = decomposition_from_json(Json::parse(din), y_graph(5));
  CHECK(verify_decomposition(d, white_noise(y_graph(5), rational(9, 25))).ok);
}

TEST_CASE("pptmix subcommand reports verified certificates") {
  Json feas = parse_out(run_cli({"pptmix", "--builtin", "C4", "--white-noise", "5/13"}));
  CHECK(feas["certificate"]["feasible"] == true);
  CHECK(feas["verified"] == true);
  CliResult inf = run_cli({"pptmix", "--builtin", "C4", "--white-noise", "2/5"});
  CHECK(inf.code == 1);
  Json doc = parse_out(inf);
  CHECK(doc["certificate"]["feasible"] == false);
  CHECK(doc["verified"] == true);
}

TEST_CASE("graph subcommand lists cut ranks") {
  Json doc = parse_out(run_cli({"graph", "--builtin", "C4"}));
  CHECK(doc["connected"] == true);
  CHECK(doc["star"] == false);
  CHECK(doc["partitions"].size() == 7);
  int rank2 = 0;
  for (const auto& p : doc["partitions"])
    if (p["rank"] == 2) ++rank2;
  CHECK(rank2 == 2);
}

TEST_CASE("oracle flag appends dense cross-checks") {
  Json doc = parse_out(
      run_cli({"classify", "--builtin", "C4", "--white-noise", "1/3", "--oracle"}));
  CHECK(doc["oracle"]["max_deviation"].get<double>() < 1e-10);
}

TEST_CASE("witness subcommand evaluates against states") {
  CliResult hit = run_cli({"witness", "--name", "r5", "--builtin", "R5", "--white-noise", "2/5"});
  CHECK(hit.code == 1);
  Json doc = parse_out(hit);
  CHECK(doc["valid"] == true);
  CHECK(doc["value"].get<std::string>().front() == '-');
  CHECK(run_cli({"witness", "--name", "r5"}).code == 0);
}
