#include <sstream>

#include "doctest.h"
#include "excoh/cli.hpp"
#include "json.hpp"

using namespace excoh;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"present", "E9"}).code == 2);
  CHECK(run({"present", "E8", "--chow", "--prime", "3"}).code == 2);
  CHECK(run({"present", "G2", "--format", "xml"}).code == 2);
  CHECK(run({"weyl", "E7"}).code == 2);
  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("failures exit 1 with a json report") {
  Run r = run({"weyl", "F4", "--cap", "100"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["status"] == "failure");
  CHECK(j["module"] == "weyl");
  CHECK(j.contains("invariant"));
}

TEST_CASE("present json") {
  Run r = run({"present", "E8", "--torsion", "--prime", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["group"] == "E8");
  CHECK(j["coefficient"] == 3);
  std::vector<std::string> names;
  for (const auto& g : j["generators"]) names.push_back(g["name"]);
  CHECK(names == std::vector<std::string>{"x8", "x20", "C8_20", "rho3", "rho15", "rho27", "rho35",
                                          "rho39", "rho47"});
  CHECK(j["graded_dims"]["8"] == 1);
}

TEST_CASE("table json and determinism") {
  Run a = run({"table", "G2", "--format", "json"});
  Run b = run({"table", "G2", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["dim"] == 14);
  CHECK(j["degrees"][9]["tor2"] == 1);
  CHECK(j["degrees"][11]["free"] == 1);

  Run v1 = run({"verify", "koszul", "--seed", "5", "--trials", "10"});
  Run v2 = run({"verify", "koszul", "--seed", "5", "--trials", "10"});
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
}

TEST_CASE("dims, weyl, dump-tables") {
  Run d = run({"dims", "G2", "--prime", "2", "--image", "--format", "json"});
  REQUIRE(d.code == 0);
  auto j = nlohmann::json::parse(d.out);
  CHECK(j["graded_dims"] == nlohmann::json{{"6", 1}, {"9", 1}});

  Run w = run({"weyl", "G2", "--format", "json"});
  REQUIRE(w.code == 0);
  auto wj = nlohmann::json::parse(w.out);
  CHECK(wj["order"] == 12);

  Run t = run({"dump-tables"});
  REQUIRE(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["exceptional"].size() == 5);
}
