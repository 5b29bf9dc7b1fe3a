#include <sstream>

#include "doctest.h"
#include "stabclass/cli.hpp"
#include "stabclass/report.hpp"

using namespace stabclass;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run_cli(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("classify emits three tables") {
  const auto j = run_json({"classify", "C6", "--category", "smooth"});
  CHECK(j["schema"] == 1);
  const auto& types = j["result"]["types"];
  REQUIRE(types.size() == 3);
  CHECK(types[0]["count"] == 9);
  CHECK(types[1]["count"] == 1);
  CHECK(types[2]["count"] == 4);
  CHECK(types[0]["bordism"]["torsion"] == Json::array({16}));
  CHECK_FALSE(j["citations"].empty());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"classify", "D5"}).code == 1);
  CHECK(run_cli({"classify", "D3", "--category", "top"}).code == 1);
  CHECK(run_cli({"classify", "Z9"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"classify", "C6", "--category", "pl"}).code == 2);
  CHECK(run_cli({"compare", "RP4", "CP2"}).code == 2);
  CHECK(run_cli({"compare", "RP4", "Q", "--structure", "pin-"}).code == 1);
  CHECK(run_cli({"cohomology", "C3", "--coeff", "Zw"}).code == 1);
  CHECK(run_cli({"catalog", "--max-order", "500"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("check-hypothesis reports the witness") {
  const auto j = run_json({"check-hypothesis", "D5"});
  CHECK(j["result"]["conclusion"] == "not_applicable");
  CHECK(j["result"]["verdict"]["witness"]["degree"] == 2);
}

TEST_CASE("compare in both categories") {
  const auto j = run_json({"compare", "RP4", "Q", "--category", "both", "--structure", "pin+"});
  const auto& c = j["result"]["comparisons"];
  REQUIRE(c.size() == 2);
  CHECK(c[0]["equivalent"] == false);
  CHECK(c[1]["equivalent"] == true);
}

TEST_CASE("cohomology, lhs and ahss subcommands") {
  const auto h = run_json({"cohomology", "C2", "--coeff", "Zw", "--degree", "3"});
  CHECK(h["result"]["groups"][1]["group"]["torsion"] == Json::array({2}));
  const auto l = run_json({"lhs", "C6"});
  CHECK(l["result"]["p0_column_vanishes"] == true);
  const auto a = run_json({"ahss", "C2", "--coeff", "STop", "--diagonal", "4"});
  CHECK(a["result"]["diagonal"]["order_bound"] == 8);
  CHECK(a["result"]["diagonal"]["collapse"] == true);
  const auto t = run_cli({"tables"});
  CHECK(t.out.find("TopPin+") != std::string::npos);
}

TEST_CASE("catalog rows") {
  const auto j = run_json({"catalog", "--max-order", "10"});
  const auto& rows = j["result"]["rows"];
  std::vector<std::string> names;
  std::vector<std::string> verdicts;
  for (const auto& r : rows) {
    names.push_back(r["group"]);
    verdicts.push_back(r["conclusion"]);
  }
  CHECK(names == std::vector<std::string>{"C2", "C6", "D3", "C10", "D5"});
  CHECK(verdicts == std::vector<std::string>{"applicable", "applicable", "not_applicable", "applicable", "not_applicable"});
  CHECK(run_json({"catalog", "--max-order", "2"})["result"]["rows"].size() == 1);
}

TEST_CASE("catalog rows match individual classify calls") {
  const auto j = run_json({"catalog", "--max-order", "30"});
  for (const auto& r : j["result"]["rows"]) {
    if (r["conclusion"] != "applicable") continue;
    const auto c = run_json({"classify", r["group"].get<std::string>(), "--category", "top"});
    std::vector<std::size_t> counts;
    for (const auto& t : c["result"]["types"]) counts.push_back(t["count"]);
    CHECK(Json(counts) == r["top_counts"]);
  }
}

TEST_CASE("JSON output is deterministic and round-trips") {
  auto strip = [](Json j) {
    j.erase("timing_ms");
    return j;
  };
  const auto a = run_json({"catalog", "--max-order", "30"});
  const auto b = run_json({"catalog", "--max-order", "30"});
  CHECK(strip(a).dump() == strip(b).dump());
  CHECK(Json::parse(a.dump()) == a);
  const auto c = run_json({"classify", "C10", "--category", "top"});
  CHECK(Json::parse(c.dump(2)) == c);
}
