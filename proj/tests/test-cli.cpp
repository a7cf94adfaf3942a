#include <cstdlib>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "json.hpp"

#include "graphprod/cli.hpp"

using namespace graphprod;

namespace {
  struct Run {
    int         code;
    std::string out, err;
  };

  Run gp(std::string const& file, std::vector<std::string> args) {
    args.insert(args.begin(), {"gp", "-c", std::string(GP_DATA_DIR) + "/" + file});
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("cli 001: equality", "[cli][quick]") {
  auto r = gp("z2.gp", {"eq", "A.g A.g", "e"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "true\n");
  r = gp("p2free.gp", {"eq", "A.a B.a", "B.a A.a"});
  CHECK(r.code == exit_negative);
  CHECK(r.out == "false\n");
}

TEST_CASE("cli 002: normal forms", "[cli][quick]") {
  CHECK(gp("p2dir.gp", {"normalize", "x"}).out == "[A.a B.a]\n");
  CHECK(gp("p2free.gp", {"normalize", "x"}).out == "[A.a][B.a][A.a]\n");
  CHECK(gp("p2dir.gp", {"mul", "A.a", "B.a"}).out == "[A.a B.a]\n");
  CHECK(gp("l3.gp", {"foata", "V3.a V1.a V2.a"}).out
        == "left: [V3.a][V1.a V2.a]\nright: [V3.a][V1.a V2.a]\n");
  CHECK(gp("z2.gp", {"normalize", "A.g A.g"}).out == "e\n");
}

TEST_CASE("cli 003: ideals", "[cli][quick]") {
  auto r = gp("p2free.gp", {"divides", "A.a B.a", "B.a"});
  CHECK(r.code == exit_ok);
  r = gp("p2free.gp", {"divides", "B.a", "A.a"});
  CHECK(r.code == exit_negative);
  CHECK(r.out == "false\n");
  r = gp("p2free.gp", {"witness", "A.a B.a", "B.a"});
  CHECK(r.out == "[A.a]\n");
  r = gp("p2free.gp", {"witness", "B.a", "A.a"});
  CHECK(r.code == exit_negative);
  CHECK(r.out == "none\n");
  CHECK(gp("p2dir.gp", {"intersect", "A.a", "B.a"}).out == "[A.a B.a]\n");
  CHECK(gp("p2free.gp", {"intersect", "A.a", "B.a"}).out == "empty\n");
}

TEST_CASE("cli 004: annihilators", "[cli][quick]") {
  auto r = gp("p2free.gp", {"annihilator", "A.a", "--verify-bound", "6,10000"});
  CHECK(r.code == exit_ok);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("e ~ [A.a]"));
  CHECK_THAT(r.out, Catch::Matchers::EndsWith("verified 3/3\n"));
  CHECK(gp("z2.gp", {"annihilator", "A.g"}).out.empty());
  CHECK(gp("p2free.gp", {"annihilator", "A.a", "--verify-bound", "6"}).code
        == exit_usage);
}

TEST_CASE("cli 005: checks", "[cli][quick]") {
  auto r = gp("t3free.gp", {"check", "wln"});
  CHECK(r.code == exit_negative);
  CHECK_THAT(r.out, Catch::Matchers::StartsWith(
                        "false\npair (A,B) violates Def (i): (A,C) not an edge\n"));
  CHECK(gp("p2free.gp", {"check", "wln"}).out == "true\n");
  CHECK(gp("p2free.gp", {"check", "relcomplete"}).code == exit_ok);
  r = gp("trace2.gp", {"check", "accpl"});
  CHECK(r.code == exit_ok);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("A: free monoid"));
  CHECK(gp("mix3.gp", {"check", "coherent"}).code == exit_ok);
  CHECK(gp("mix3.gp", {"check", "nonsense"}).code == exit_usage);
}

TEST_CASE("cli 006: decompose", "[cli][quick]") {
  CHECK(gp("p2dir.gp", {"decompose"}).out
        == "free-pair:\nrestricted-direct: A B\ngroup-product:\n");
  CHECK(gp("p2free.gp", {"decompose"}).out
        == "free-pair: A B\nrestricted-direct:\ngroup-product:\n");
  CHECK(gp("t3free.gp", {"decompose"}).code == exit_negative);
}

TEST_CASE("cli 007: oracle commands", "[cli][quick]") {
  CHECK(gp("p2dir.gp", {"oracle", "eq", "A.a B.a A.a", "A.a B.a"}).out
        == "true\n");
  CHECK(gp("p2free.gp", {"oracle", "leq", "A.a B.a", "B.a"}).out == "A.a\n");
  CHECK(gp("p2free.gp", {"oracle", "leq", "B.a", "A.a", "--bound", "3"}).code
        == exit_negative);
  CHECK(gp("p2dir.gp", {"oracle", "intersect", "A.a", "B.a", "--bound", "2"}).out
        == "A.a B.a\n");
  CHECK_THAT(gp("p2free.gp", {"oracle", "ann", "A.a", "--bound", "1"}).out,
             Catch::Matchers::ContainsSubstring("e ~ A.a"));
}

TEST_CASE("cli 008: the bound environment variable", "[cli][quick]") {
  ::setenv("GP_ORACLE_BOUND", "0", 1);
  auto const r = gp("p2free.gp", {"oracle", "leq", "A.a B.a", "B.a"});
  ::unsetenv("GP_ORACLE_BOUND");
  CHECK(r.code == exit_negative);
  // an explicit flag wins
  ::setenv("GP_ORACLE_BOUND", "0", 1);
  auto const s
      = gp("p2free.gp", {"oracle", "leq", "A.a B.a", "B.a", "--bound", "1"});
  ::unsetenv("GP_ORACLE_BOUND");
  CHECK(s.code == exit_ok);
}

TEST_CASE("cli 009: JSON mirrors the text output", "[cli][quick]") {
  using nlohmann::json;
  auto r = gp("p2dir.gp", {"--json", "intersect", "A.a", "B.a"});
  auto j = json::parse(r.out);
  CHECK(j["command"] == "intersect");
  CHECK(j["generators"] == json::array({"[A.a B.a]"}));
  CHECK(j["empty"] == false);
  r = gp("t3free.gp", {"check", "wln", "--json"});
  j = json::parse(r.out);
  CHECK(r.code == exit_negative);
  CHECK(j["result"] == false);
  CHECK(j["reasons"][0] == "pair (A,B) violates Def (i): (A,C) not an edge");
  // identical inputs give identical bytes
  CHECK(gp("mix3.gp", {"--json", "annihilator", "ann"}).out
        == gp("mix3.gp", {"--json", "annihilator", "ann"}).out);
}

TEST_CASE("cli 010: usage and parse errors", "[cli][quick]") {
  CHECK(gp("p2dir.gp", {}).code == exit_usage);
  CHECK(gp("p2dir.gp", {"eq", "A.a"}).code == exit_usage);
  CHECK(gp("p2dir.gp", {"eq", "A.a", "Q.a"}).code == exit_usage);
  CHECK(gp("missing.gp", {"normalize", "e"}).code == exit_usage);
  std::ostringstream out, err;
  CHECK(run_cli({"gp", "normalize", "e"}, out, err) == exit_usage);
  CHECK(run_cli({"gp", "--help"}, out, err) == exit_ok);
}
