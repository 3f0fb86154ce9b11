#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = woplab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("decompose") {
  const Result latex = run({"decompose", "3", "--latex"});
  CHECK(latex.code == 0);
  const auto rows = lines(latex.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[4] == "\\frac{1}{3}\\sum_{i_1,i_2,i_3 \\geq 1} i_1 i_2 i_3 p_{i_1+i_2+i_3}"
                   "\\frac{\\partial^3}{\\partial p_{i_1}\\partial p_{i_2}\\partial p_{i_3}} & FS_{(1 3 2)}");

  CHECK(lines(run({"decompose", "1"}).out).size() == 1);

  const Result json = run({"--json", "decompose", "4"});
  CHECK(json.code == 0);
  const auto arr = nlohmann::json::parse(json.out);
  REQUIRE(arr.size() == 24);
  int top = 0;
  for (const auto &t : arr)
    top += t["degree"] == 5 ? 1 : 0;
  CHECK(top == 14);

  CHECK(run({"decompose", "9"}).code == 2);
  CHECK(run({"decompose", "9", "--max-n", "9"}).code == 0);
  CHECK(run({"decompose", "3", "--json", "--latex"}).code == 2);
}

TEST_CASE("apply") {
  CHECK(run({"apply", "2", "p1^3"}).out == "3*p1*p2\n");
  CHECK(run({"apply", "1", "p2*p3"}).out == "5*p2*p3\n");
  CHECK(run({"apply", "3", "--perm", "(321)", "p1^3"}).out == "2*p3\n");
  const auto j = nlohmann::json::parse(run({"apply", "2", "p1^3", "--json"}).out);
  CHECK(j["result"] == "3*p1*p2");

  const Result bad = run({"apply", "2", "p1 + q2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 5") != std::string::npos);
  CHECK(run({"apply", "3", "--perm", "(21)", "p1"}).code == 2);
  CHECK(run({"apply", "2", "p1", "--latex"}).code == 2);
}

TEST_CASE("seq") {
  CHECK(run({"seq", "dual", "(7(65)(4)(3)21)"}).out == "(7(6)(543)2)(1)\n");
  CHECK(run({"seq", "decode", "(4)(321)"}).out == "(4)(3 2 1)\n");
  CHECK(run({"seq", "encode", "(7 2 1)(6 5)(4)(3)"}).out == "(7(65)(4)(3)21)\n");
  CHECK(lines(run({"seq", "enumerate", "3", "2"}).out).size() == 3);
  CHECK(nlohmann::json::parse(run({"seq", "enumerate", "4", "2", "--json"}).out).size() == 6);
  const Result c = run({"seq", "classify", "(6)(5(4)3(2)1)"});
  CHECK(c.code == 0);
  CHECK(c.out.find("pair 4 [6..6] top-level bottom-level") != std::string::npos);
  CHECK(c.out.find("adjacent 4 1") != std::string::npos);
  const auto cj = nlohmann::json::parse(run({"seq", "classify", "(2)(1)", "--json"}).out);
  CHECK(cj["pairs"].size() == 2);
  CHECK(run({"seq", "dual", "(4)32(1)"}).code == 2);
  CHECK(run({"seq", "encode", "(123)"}).code == 2);
  CHECK(run({"seq", "shuffle", "(1)"}).code == 2);
  CHECK(run({"seq", "enumerate", "13", "2"}).code == 2);
}

TEST_CASE("count") {
  const Result r = run({"count", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total = 14, catalan = 14  PASS") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"count", "3", "--json"}).out);
  CHECK(j["total"] == 5);
}

TEST_CASE("verify") {
  const Result counts = run({"verify", "counts", "1..5"});
  CHECK(counts.code == 0);
  CHECK(counts.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "star", "1..6"}).code == 0);
  CHECK(run({"verify", "dual", "1..7"}).code == 0);
  CHECK(run({"verify", "lift", "1..5"}).code == 0);
  CHECK(run({"verify", "oracle", "1..2"}).code == 0);
  const auto j = nlohmann::json::parse(run({"verify", "star", "4", "--json"}).out);
  CHECK(j["ok"] == true);
  CHECK(run({"verify", "oracle", "4"}).code == 2);
  CHECK(run({"verify", "nothing", "1..2"}).code == 2);
  CHECK(run({"verify", "star", "3..1"}).code == 2);
  CHECK(run({"verify", "star", "x"}).code == 2);
}

TEST_CASE("lift and project") {
  CHECK(run({"lift", "(4)(321)", "3"}).out == "(1 3 2)(4)(5)\n");
  CHECK(run({"lift", "(1)(2)", "0"}).out == "(1 3)(2)\n");
  CHECK(run({"project", "(321)"}).out == "(1 2) 0\n");
  CHECK(run({"lift", "(12)", "5"}).code == 2);
  CHECK(run({"project", "(1)"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"decompose"}).code == 2);
}

TEST_CASE("environment bound") {
  setenv("WOPLAB_MAX_N", "2", 1);
  CHECK(run({"decompose", "3"}).code == 2);
  CHECK(run({"decompose", "3", "--max-n", "3"}).code == 0);
  unsetenv("WOPLAB_MAX_N");
  CHECK(run({"decompose", "3"}).code == 0);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"decompose", "4", "--json"}).out == run({"decompose", "4", "--json"}).out);
  CHECK(run({"seq", "enumerate", "6", "3"}).out == run({"seq", "enumerate", "6", "3"}).out);
}
