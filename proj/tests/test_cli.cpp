#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "regcrys/text_format.hpp"

using regcrys::Partition;
using regcrys::parse_partition;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = regcrys::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("conj and abacus") {
  CHECK(run({"conj", "6,4,2,1,1"}).out == "5,3,2,2,1,1\n");
  CHECK(run({"conj", "-"}).out == "-\n");
  const Run a = run({"abacus", "show", "--e", "5", "--beads", "7", "6,4,2,1,1"});
  CHECK(a.code == 1);
  const Run b = run({"abacus", "show", "--e", "5", "--beads", "10", "6,4,2,1,1"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("0 1 2 3 4\n", 0) == 0);
  const auto j = nlohmann::json::parse(run({"abacus", "show", "--e", "5", "--beads", "10", "--json", "6,4,2,1,1"}).out);
  CHECK(j["n"] == 10);
}

TEST_CASE("reg, restrict and ladder-class") {
  CHECK(run({"reg", "--e", "5", "--y", "3", "9,3^3,2"}).out == "9,6,5\n");
  CHECK(run({"reg", "--e", "5", "--y", "3", "--trace", "9,3^3,2"}).out == "9,3,3,3,2\n9,6,5\n");
  CHECK(run({"restrict", "--e", "3", "--y", "2", "5,1"}).out == "3,2,1\n");
  CHECK(run({"ladder-class", "--e", "3", "--y", "2", "5,1"}).out ==
        "3,2,1 restricted\n3,3\n4,1,1\n5,1 regular\n");
  const auto j = nlohmann::json::parse(run({"reg", "--e", "4", "--y", "3/2", "--json", "2,1,1"}).out);
  CHECK(j["params"] == "(8,3)");
  CHECK(parse_partition(j["result"].get<std::string>()).size() == 4);
  CHECK(run({"reg", "--e", "4", "--y", "4", "2,1"}).code == 1);
  CHECK(run({"reg", "--e", "4", "--y", "x", "2,1"}).code == 2);
}

TEST_CASE("crystal and chain") {
  const Run c = run({"crystal", "--e", "2", "--arm", "0"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("digraph crystal {\n", 0) == 0);
  CHECK(run({"crystal", "--e", "3", "--slope", "1-", "--max-size", "6"}).out ==
        run({"crystal", "--e", "3", "--arm", "0,1"}).out);
  CHECK(run({"crystal", "--e", "3", "--arm", "0,1", "--slope", "1"}).code == 2);
  CHECK(run({"crystal", "--e", "3", "--arm", "0,3"}).code == 1);
  const std::string path = "test_cli_crystal.dot";
  const Run d = run({"crystal", "--e", "3", "--arm", "0,1", "--dot", path});
  CHECK(d.out == "arm (0,1) vertices 22 edges 24 layers 1,1,2,2,4,5,7\n");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"crystal", "--e", "3", "--arm", "0,1"}).out);
  std::remove(path.c_str());

  CHECK(run({"chain", "--e", "4", "--from", "2,4,6,8", "--to", "1,2,4,5"}).out ==
        "regularise (4,2)\nregularise (16,7)\nregularise (12,5)\nregularise (8,3)\n");
  CHECK(run({"chain", "--e", "4", "--from", "2,4,6,8", "--to", "1,2,4,5", "4,3^2,2,1^4"}).out ==
        "4,3,3,2,1,1,1,1\n"
        "regularise (4,2): 5,4,2,1,1,1,1,1\n"
        "regularise (16,7): 5,4,2,1,1,1,1,1\n"
        "regularise (12,5): 6,4,2,1,1,1,1\n"
        "regularise (8,3): 6,4,2,1,1,1,1\n");
  const Run back = run({"chain", "--e", "4", "--from", "1,2,4,5", "--to", "2,4,6,8", "--trace"});
  CHECK(back.out.rfind("restrictise (8,3) [(1,2,4,5) -> (1,3,4,6)]\n", 0) == 0);
  CHECK(run({"chain", "--e", "4", "--from", "2,4", "--to", "1,2,4"}).code == 1);
}

TEST_CASE("mull") {
  CHECK(run({"mull", "--e", "3", "6,2,1"}).out == "5,2,2\n");
  CHECK(run({"mull", "--e", "3", "--trace", "6,2,1"}).out ==
        "mu = 3,2,1,1,1,1  x = 2\ny = 2: 4,1,1,1,1,1\ny = 4/3: 5,1,1,1,1\ny = 1: 5,2,2\n5,2,2\n");
  const Run bad = run({"mull", "--e", "3", "2,2,2"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"mull", "--e", "3", "1,2"}).code == 2);
  CHECK(run({"mull", "6,2,1"}).code == 2);
  CHECK(run({"mull", "--e", "0", "1"}).code == 2);
  CHECK(run({"mull", "--e", "1", "-"}).out == "-\n");
  const auto j = nlohmann::json::parse(run({"mull", "--e", "3", "--json", "6,2,1"}).out);
  CHECK(j["steps"].size() == 3);
  CHECK(j["steps"][1]["y"] == "4/3");
  CHECK(parse_partition(j["result"].get<std::string>()) == Partition{5, 2, 2});
}

TEST_CASE("split and paget") {
  CHECK(run({"split", "--e", "5", "--I", "0,2", "--beads", "10", "5,3,3,2,1"}).out ==
        "lambda_I 2\nlambda_Ibar 2,1\nu 3\nseparated no\n");
  CHECK(run({"split", "--e", "5", "--I", "0,2", "--beads", "12", "5,3,3,2,1"}).code == 1);
  CHECK(run({"paget", "--e", "4", "--beads", "20", "11,10,9,8,7,5,5,4,3,2,1^5"}).out ==
        "sigma 1,3,0,2\n"
        "quotient 1,1 | 1 | - | 2\n"
        "mu 19,10,9,8,7,4,3,3,3,2,1\n"
        "mu quotient separated yes\n"
        "mullineux 19,10,9,8,7,4,3,3,3,2,1\n"
        "agrees yes\n");
}

TEST_CASE("verify") {
  const Run v = run({"verify", "lyle", "--e", "3", "--max", "8", "--threads", "1"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS lyle: ", 0) == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "bogus"}).code == 2);
  const auto j = nlohmann::json::parse(run({"verify", "mullineux", "--e", "2", "--max", "6", "--json"}).out);
  REQUIRE(j.is_array());
  for (const auto& p : j) CHECK(p["failed"] == 0);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"conj", "3,a"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run a = run({"mull", "--e", "5", "--json", "9,7,4,4,1"});
  const Run b = run({"mull", "--e", "5", "--json", "9,7,4,4,1"});
  CHECK(a.out == b.out);
}
