/*
 * Copyright 2026 The Rotundus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "rotundus/cli.hpp"
#include "rotundus/json_io.hpp"
#include "rotundus/rotundus.hpp"
#include "rotundus/triangulation.hpp"

using namespace rotundus;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("rotundus and continuant values") {
  auto r = run({"rotundus", "--values", "5,2,2,2,1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "0\n");
  CHECK(r.err.empty());

  for (const char* m : {"def", "cyclic", "trace", "pf"})
    CHECK(run({"rotundus", "--values", "3,1,4,2", "--method", m}).out == "5\n");

  CHECK(run({"rotundus", "--symbolic", "--n", "4"}).out ==
        "a1*a2*a3*a4 - a1*a2 - a1*a4 - a2*a3 - a3*a4 + 2\n");
  CHECK(run({"continuant", "--values", "1,2,3", "--method", "det"}).out == "2\n");
  CHECK(run({"continuant", "--symbolic", "--n", "3"}).out == "a1*a2*a3 - a1 - a3\n");

  auto j = json::parse(run({"--json", "rotundus", "--values", "2,1,1,1,1"}).out);
  CHECK(j["value"] == "0");
  auto p = json::parse(run({"--json", "continuant", "--symbolic", "--n", "2"}).out);
  CHECK(poly_from_json(p["polynomial"]) == MultiPoly::parse("a1a2 - 1", 2));
}

TEST_CASE("identity verification output") {
  auto r = run({"--json", "rotundus", "--verify-identities", "--n", "3"});
  CHECK(r.code == cli::kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["det_equals_r_squared"] == true);
  CHECK(j["pf_squared_equals_r_squared"] == true);
  CHECK(j["sign"] == -1);
}

TEST_CASE("det and pfaffian") {
  CHECK(run({"det", "--rotundus", "--values", "1,2,3"}).out == "0\n");
  CHECK(run({"det", "--rotundus", "--kind", "symmetric", "--values", "1"}).out == "3\n");
  CHECK(run({"pfaffian", "--rotundus", "--values", "4"}).out == "4\n");

  const std::string path = "cli_test_matrix.json";
  {
    std::ofstream f(path);
    f << R"({"dim":2,"entries":[["0","-6"],["6","0"]]})";
  }
  CHECK(run({"pfaffian", "--matrix", path}).out == "-6\n");
  CHECK(run({"det", "--matrix", path}).out == "36\n");
  std::remove(path.c_str());

  CHECK(run({"det", "--matrix", "does-not-exist.json"}).code == cli::kExitUsage);
}

TEST_CASE("triangulate, solve, chebyshev, hankel") {
  auto t = run({"triangulate", "--n", "5", "--quiddities"});
  const auto qs = lines(t.out);
  REQUIRE(qs.size() == 5);
  std::set<std::string> seen(qs.begin(), qs.end());
  CHECK(seen.size() == 5);
  for (const auto& rot : {"(1,3,1,2,2)", "(3,1,2,2,1)", "(1,2,2,1,3)", "(2,2,1,3,1)", "(2,1,3,1,2)"})
    CHECK(seen.count(rot) == 1);

  auto tj = json::parse(run({"--json", "triangulate", "--n", "6", "--centrally-symmetric"}).out);
  REQUIRE(tj.is_array());
  for (const auto& e : tj) CHECK(is_centrally_symmetric(triangulation_from_json(e)));

  auto s = json::parse(run({"--json", "solve", "--n", "2", "--max", "3"}).out);
  CHECK(s["solutions"] == json::parse("[[1,2],[2,1]]"));

  CHECK(run({"chebyshev", "--kind", "first", "--n", "4"}).out == "8*x^4 - 8*x^2 + 1\n");
  CHECK(run({"chebyshev", "--kind", "second", "--n", "2", "--normalized"}).out == "x^2 - 1\n");

  auto h = run({"hankel", "--sequence", "1,2,2,2", "--count", "7"});
  CHECK(lines(h.out).at(0) == "1,1,2,5,14,42,132");
  auto hj = json::parse(run({"--json", "hankel", "--sequence", "1,2,2,2", "--count", "7"}).out);
  CHECK(hj["passed"] == true);
  CHECK(run({"hankel", "--sequence", "1,1,3,3", "--count", "6"}).code == cli::kExitUsage);
}

TEST_CASE("verify suite") {
  auto r = run({"verify", "--suite", "all", "--n-max", "6", "--seed", "42"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("[triangulation]") != std::string::npos);

  auto bad = run({"--json", "verify", "--suite", "pfaffian", "--n-max", "3", "--inject-fault", "omega-sign"});
  CHECK(bad.code == cli::kExitVerificationFailed);
  auto j = json::parse(bad.out);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0]["counterexample"].get<std::string>().find("Omega") != std::string::npos);

  for (const auto& g : {"continuant", "rotundus", "block", "symmetric", "conway-coxeter", "chebyshev", "hankel"})
    CHECK(run({"verify", "--suite", g, "--n-max", "4"}).code == cli::kExitOk);
}

TEST_CASE("usage errors name the flag") {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases = {
      {{"rotundus", "--values", "1,x"}, "--values"},
      {{"rotundus", "--values", "1", "--method", "nope"}, "--method"},
      {{"continuant", "--symbolic"}, "--n"},
      {{"triangulate", "--n", "2"}, "--n"},
      {{"triangulate", "--n", "99"}, "--n"},
      {{"solve", "--n", "0", "--max", "3"}, "--n"},
      {{"solve", "--n", "3", "--max", "0"}, "--max"},
      {{"chebyshev", "--kind", "third", "--n", "2"}, "--kind"},
      {{"chebyshev", "--kind", "first", "--n", "-1"}, "--n"},
      {{"verify", "--n-max", "1"}, "--n-max"},
      {{"verify", "--suite", "bogus"}, "--suite"},
      {{"verify", "--inject-fault", "x"}, "--inject-fault"},
      {{"det", "--rotundus", "--kind", "hermitian", "--values", "1"}, "--kind"},
      {{"frob"}, "frob"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args.front());
    CAPTURE(c.flag);
    const auto r = run(c.args);
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find(c.flag) != std::string::npos);
    CHECK(lines(r.err).size() == 1);
  }
  CHECK(run({}).code == cli::kExitUsage);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--suite", "all", "--n-max", "5", "--seed", "9"},
      {"--json", "verify", "--suite", "all", "--n-max", "5", "--seed", "9"},
      {"--json", "solve", "--n", "5", "--max", "10", "--tp", "--up-to-rotation"},
      {"--json", "triangulate", "--n", "8", "--quiddities"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
