#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "orbitkit/cli.hpp"
#include "orbitkit/json_io.hpp"

using namespace orbitkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json doc() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tensor command example") {
  const auto r = run({"tensor", "--rep", "regular:cyclic:2", "--x", "1,2", "--degree", "2"});
  REQUIRE(r.code == kExitOk);
  const auto doc = r.doc();
  CHECK(doc["command"] == "tensor");
  CHECK(doc["entries"] == nlohmann::json::parse(R"([[[0,0],"5"],[[0,1],"4"],[[1,1],"5"]])"));
}

TEST_CASE("recover command round trip") {
  const auto r = run({"recover", "--rep", "regular:cyclic:3", "--seed", "7"});
  REQUIRE(r.code == kExitOk);
  const auto doc = r.doc();
  CHECK(doc["status"] == "ok");
  CHECK(doc["matches_true_orbit"] == true);
  CHECK(doc["orbit"].size() == 3);

  const auto f = run({"recover", "--rep", "regular:dihedral:3", "--seed", "2", "--scalar", "f64"});
  REQUIRE(f.code == kExitOk);
  CHECK(f.doc()["status"] == "ok");

  const auto bad = run({"recover", "--rep", "dihedral-standard:4", "--seed", "1"});
  CHECK(bad.code == kExitMismatch);
  CHECK(bad.doc()["status"] == "LinearlyDependentOrbit");
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"recover", "--rep", "regular:dihedral:4", "--seed", "3"},
      {"recover", "--rep", "regular:cyclic:5", "--seed", "3", "--scalar", "f64"},
      {"table1", "--seed", "4"},
      {"conjecture", "--n-max", "5"},
      {"check-dihedral-cmf", "--n", "5", "--seed", "2"},
      {"invariants", "--n", "5", "--d", "3", "--max-degree", "3"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("table and conjecture exit codes") {
  const auto t = run({"table1"});
  CHECK(t.code == kExitOk);
  const auto doc = t.doc();
  CHECK(doc["all_match"] == true);
  CHECK(doc["rows"].size() == 8);

  const auto c = run({"conjecture", "--n-max", "6"});
  CHECK(c.code == kExitOk);
  CHECK(c.doc()["all_agree"] == true);
}

TEST_CASE("dihedral command reports its verdict") {
  CHECK(run({"check-dihedral-cmf", "--n", "5", "--seed", "1"}).code == kExitOk);
  const auto even = run({"check-dihedral-cmf", "--n", "4", "--seed", "1"});
  CHECK(even.code == kExitMismatch);
  CHECK(even.doc()["command"] == "check-dihedral-cmf");
}

TEST_CASE("invariants command counts") {
  const auto r = run({"invariants", "--n", "5", "--d", "3", "--max-degree", "3"});
  REQUIRE(r.code == kExitOk);
  const auto doc = r.doc();
  CHECK(doc["count"] == 19);
  CHECK(doc["counts_by_degree"] == nlohmann::json::parse("[3,6,10]"));
  CHECK(doc["invariants"][0]["name"] == "p[1]");
}

TEST_CASE("usage errors name the offending flag") {
  const auto unknown = run({"table1", "--bogus"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("--bogus") != std::string::npos);

  const auto bad_rep = run({"recover", "--rep", "nope:1"});
  CHECK(bad_rep.code == kExitUsage);
  CHECK(bad_rep.err.find("--rep") != std::string::npos);

  const auto bad_scalar = run({"recover", "--rep", "regular:cyclic:3", "--scalar", "quad"});
  CHECK(bad_scalar.code == kExitUsage);
  CHECK(bad_scalar.err.find("--scalar") != std::string::npos);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"recover"}).code == kExitUsage);
  CHECK(run({"bench", "--suite", "sideways"}).code == kExitUsage);
}

TEST_CASE("text output") {
  const auto r = run({"recover", "--rep", "regular:cyclic:3", "--seed", "7", "--out", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("status ok", 0) == 0);
}

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar<Rational>("-3/6") == Rational(-1, 2));
  CHECK(parse_scalar<Rational>("7") == 7);
  CHECK_THROWS_AS(parse_scalar<Rational>("x"), Error);
  CHECK(parse_scalar<Complex>("2.5") == Complex(2.5, 0));
  CHECK(parse_scalar<Complex>("1/2") == Complex(0.5, 0));
  CHECK(parse_scalar<Complex>("1+2i") == Complex(1, 2));
  CHECK(parse_scalar<Complex>("-0.5i") == Complex(0, -0.5));
  CHECK(parse_scalar<Complex>("2i") == Complex(0, 2));
  CHECK(parse_vector<Rational>("1, 2/3,-4") == Vector<Rational>{Rational(1), Rational(2, 3), Rational(-4)});
  CHECK_THROWS_AS(parse_vector<Rational>("1,,2"), Error);
}
