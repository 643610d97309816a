#include <doctest.h>

#include <sstream>

#include "fcadr/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fcadr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTable = FCADR_TEST_DATA "/table1.csv";
const std::string kTableCxt = FCADR_TEST_DATA "/table1.cxt";

}  // namespace

TEST_CASE("rules command") {
  auto r = run({"rules", kTable, "--decision", "d1,d2,d3", "--type", "I", "--necessary"});
  CHECK(r.code == 0);
  CHECK(r.out == "(4,f)->(4,d2d3)\n(35,ce)->(235,d1d2)\n(135,ace)->(1235,d1)\n(2345,bcdef)->(2345,d2)\n");

  auto all = run({"rules", kTable, "--decision", "d1,d2,d3"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 15);

  auto ii = run({"rules", kTableCxt, "--decision", "d1,d2,d3", "--type", "II", "--necessary", "--include-trivial",
                 "--algorithm", "s2"});
  CHECK(ii.out == "(∅,∅)->(∅,∅)\n(4,f)->(4,d2d3)\n(135,ace)->(1235,d1d2)\n(12345,abcdef)->(12345,d1d2d3)\n");

  auto json = run({"rules", kTable, "--decision", "d1,d2,d3", "--necessary", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"necessary\": true") != std::string::npos);
}

TEST_CASE("every algorithm prints the same rules") {
  std::string expected;
  for (std::string alg : {"alg1", "alg2", "bruteforce"}) {
    auto r = run({"rules", kTable, "--decision", "d1,d2,d3", "--necessary", "--algorithm", alg});
    CHECK(r.code == 0);
    if (expected.empty()) expected = r.out;
    CHECK(r.out == expected);
  }
}

TEST_CASE("reduce command") {
  auto r = run({"reduce", kTable, "--decision", "d1,d2,d3", "--type", "II"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reductions:\n  abf\n  adf\ncore: af\n") != std::string::npos);
  CHECK(r.out.find("function: a ∧ f ∧ (b ∨ d)") != std::string::npos);
  CHECK(r.err.empty());

  auto j = run({"reduce", kTable, "--decision", "d1,d2,d3", "--format", "json"});
  CHECK(j.out.find("\"core\"") != std::string::npos);
}

TEST_CASE("lattice command") {
  auto r = run({"lattice", kTable, "--decision", "d1,d2,d3", "--part", "conditional", "--kind", "object", "--format",
                "dot"});
  CHECK(r.code == 0);
  std::size_t nodes = 0;
  for (auto pos = r.out.find("[label="); pos != std::string::npos; pos = r.out.find("[label=", pos + 1)) ++nodes;
  CHECK(nodes == 13);

  auto comp = run({"lattice", kTable, "--decision", "d1,d2,d3", "--part", "complement-decision"});
  CHECK(comp.out.find("(1,d2d3)") != std::string::npos);

  auto whole = run({"lattice", kTable, "--format", "json"});
  CHECK(whole.code == 0);
}

TEST_CASE("check command") {
  auto ok = run({"check", kTable, "--decision", "d1,d2,d3"});
  CHECK(ok.out == "canonical\n");
  auto comp = run({"check", kTable, "--decision", "d1,d2,d3", "--part", "complement-decision", "--format", "json"});
  CHECK(comp.code == 0);
  CHECK(comp.out.find("\"canonical\": true") != std::string::npos);
  auto whole = run({"check", kTable});
  CHECK(whole.out == "canonical\n");
}

TEST_CASE("output is stable across runs") {
  std::vector<std::string> args{"lattice", kTable, "--decision", "d1,d2,d3", "--kind", "object"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"rules", kTable}).code == 1);
  CHECK(run({"rules", kTable, "--decision", "d1", "--bogus"}).code == 1);
  CHECK(run({"rules", kTable, "--decision", "d1", "--type", "III"}).code == 1);
  CHECK(run({"rules", kTable, "--decision", "d1", "--necessary", "--type", "II", "--algorithm", "alg1"}).code == 1);
  CHECK(run({"rules", kTable, "--decision", "d1", "--algorithm", "alg1"}).code == 1);
  CHECK(run({"rules", kTable, "--decision", "d1", "--format", "dot"}).code == 1);
  CHECK(run({"lattice", kTable, "--part", "decision"}).code == 1);
  CHECK(run({"bench", "--sizes", "4x3x2", "--algorithms", ""}).code == 1);
  CHECK(run({"bench", "--sizes", "4x3"}).code == 1);
  CHECK(run({"bench", "--sizes", "20x3x2", "--algorithms", "bruteforce,alg1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data errors exit 2") {
  CHECK(run({"rules", FCADR_TEST_DATA "/missing.csv", "--decision", "d1"}).code == 2);
  auto r = run({"rules", kTable, "--decision", "z"});
  CHECK(r.code == 2);
  CHECK(r.err.find("z") != std::string::npos);
  CHECK(run({"rules", kTable, "--decision", "a,b,c,d,e,f,d1,d2,d3"}).code == 2);
}

TEST_CASE("bench command") {
  auto r = run({"bench", "--sizes", "20x10x4", "--density", "0.3", "--seeds", "1..5", "--algorithms", "alg1,alg2"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "size_u,size_m,size_n,density,seed,algorithm,wall_ms,n_Lo,n_Ln,n_rules");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  auto rule_count = [](const std::string& row) { return row.substr(row.rfind(',') + 1); };
  for (std::size_t i = 0; i < rows.size(); i += 2) CHECK(rule_count(rows[i]) == rule_count(rows[i + 1]));

  auto brute = run({"bench", "--sizes", "8x6x3", "--seeds", "4", "--algorithms", "bruteforce,alg1"});
  CHECK(brute.code == 0);

  auto ii = run({"bench", "--sizes", "8x5x3", "--type", "II", "--seeds", "1,2", "--algorithms", "s1,s2,complement"});
  CHECK(ii.code == 0);
}
