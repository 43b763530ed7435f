#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "reflquot/serialize.hpp"

using namespace reflquot;
using namespace reflquot::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("reflquot_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config text round trips for every bundled fixture") {
  REQUIRE_FALSE(fixture_names().empty());
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const ScenarioConfig c = parse_config(fixture_text(name), name);
    CHECK(c.name == name);
    const std::string once = write_config(c);
    const std::string twice = write_config(parse_config(once, "rewritten"));
    CHECK(once == twice);
  }
}

TEST_CASE("config parse errors carry the source and line") {
  try {
    parse_config("[scenario]\nname = x\n[group]\ntype = A\nrank = 2\ncolour = blue\n", "bad.ini");
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad.ini") != std::string::npos);
    CHECK(msg.find("colour") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("[nonsense]\nx = 1\n", "s"), ConfigError);
  CHECK_THROWS_AS(parse_config("[group]\ntype = A\nrank = 0\n[object]\nkind = semigroup\ngenerators = 1\n", "s")
                      .validate(),
                  ConfigError);
  CHECK_THROWS_AS(parse_rows("1,x"), std::exception);
  CHECK(parse_rows("1,0;0,1/2") ==
        std::vector<RationalVector>{RationalVector::from_ints({1, 0}), RationalVector{Rational(0), Rational(1, 2)}});
}

TEST_CASE("roots command") {
  const auto r = invoke({"roots", "--type", "A2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("|W| = 6") != std::string::npos);
  const auto j = invoke({"roots", "--type", "B", "--rank", "2", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const Json doc = Json::parse(j.out);
  CHECK(doc.at("group_order") == 8);
  CHECK(doc.at("all_roots").size() == 8);
  CHECK(invoke({"roots", "--type", "A", "--rank", "0"}).code == kExitUsage);
  CHECK(invoke({"roots", "--type", "Q3"}).code == kExitUsage);
}

TEST_CASE("psi command") {
  const auto r = invoke({"psi", "--type", "A1", "--point", "1,3"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("psi: χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}") != std::string::npos);
  const auto bad = invoke({"psi", "--type", "A1", "--point", "3,1"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("not dominant") != std::string::npos);
  CHECK(invoke({"psi", "--type", "A1"}).code == kExitUsage);
  CHECK(invoke({"psi", "--type", "A1", "--point", "1,2,3"}).code == kExitUsage);
}

TEST_CASE("invpsi command") {
  const std::string orbit = temp_file("orbit.json", R"({"basis":"orbit","terms":[{"point":{"z":["0","0"],"lambda":[2]},"coeff":1}]})");
  const auto r = invoke({"invpsi", "--type", "A1", orbit});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("preimage: χ^{2λ1} - 2χ^0") != std::string::npos);

  const std::string mono = temp_file("mono.json",
                                     R"({"basis":"monomial","terms":[{"point":[1,3],"coeff":1},{"point":[3,1],"coeff":1}]})");
  CHECK(invoke({"invpsi", "--type", "A1", mono}).code == kExitOk);

  const std::string lopsided = temp_file("lopsided.json", R"({"basis":"monomial","terms":[{"point":[1,3],"coeff":1}]})");
  CHECK(invoke({"invpsi", "--type", "A1", lopsided}).code == kExitUsage);
  const std::string broken = temp_file("broken.json", "{\"basis\": \n ]");
  const auto b = invoke({"invpsi", "--type", "A1", broken});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("line 2") != std::string::npos);
}

TEST_CASE("check and hilbert commands") {
  CHECK(invoke({"check", "--fixture", "figure1"}).code == kExitOk);
  const auto sq = invoke({"check", "--fixture", "square", "--format", "csv"});
  REQUIRE(sq.code == kExitOk);
  CHECK(sq.out.rfind("t,total_points,orbit_count,domain_slice_count\n0,1,1,1\n1,4,3,3\n", 0) == 0);
  const auto h = invoke({"hilbert", "--type", "A2", "--polytope", "simplex3", "--tmax", "3"});
  REQUIRE(h.code == kExitOk);
  CHECK(h.out == "t,total_points,orbit_count,domain_slice_count\n0,1,1,1\n1,3,1,1\n2,6,2,2\n3,10,3,3\n");
  const auto orth = invoke({"check", "--type", "A2", "--semigroup", "orthant", "--box", "3", "--samples", "5",
                            "--format", "json"});
  REQUIRE(orth.code == kExitOk);
  CHECK(Json::parse(orth.out).at("checks").size() > 0);
  // Precondition failures are usage errors, not failed checks.
  CHECK(invoke({"check", "--semigroup", "gens:2,3"}).code == kExitUsage);
  CHECK(invoke({"check", "--type", "A1", "--polytope", "simplex3"}).code == kExitUsage);
  CHECK(invoke({"hilbert", "--type", "A2"}).code == kExitUsage);
}

TEST_CASE("config command output reloads to the same scenario") {
  const auto r = invoke({"config", "--fixture", "b2cross", "--tmax", "2", "--seed", "7"});
  REQUIRE(r.code == kExitOk);
  const ScenarioConfig c = parse_config(r.out, "stdout");
  CHECK(c.t_max == 2);
  CHECK(c.seed == 7);
  CHECK(write_config(c) == r.out);
  const std::string path = temp_file("b2cross.ini", r.out);
  CHECK(invoke({"config", "--config", path}).out == r.out);
}

TEST_CASE("fixtures, help and unknown input") {
  const auto f = invoke({"fixtures"});
  CHECK(f.code == kExitOk);
  CHECK(f.out.find("figure1\n") != std::string::npos);
  CHECK(invoke({"--help"}).code == kExitOk);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"check", "--fixture", "nope"}).code == kExitUsage);
  CHECK(invoke({"roots", "--type", "A2", "--format", "yaml"}).code == kExitUsage);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "reflquot_test_out.json").string();
  const auto r = invoke({"check", "--fixture", "figure1", "--format", "json", "--out", path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("wrote " + path) != std::string::npos);
  CHECK(read_document(path).at("checks").size() > 0);
}

}  // TEST_SUITE
