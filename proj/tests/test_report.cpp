#include <doctest.h>

#include "plrs/families.hpp"
#include "plrs/hunt.hpp"
#include "plrs/report.hpp"

using namespace plrs;

TEST_CASE("int_json switches to strings past int64") {
  CHECK(int_json(BigInt(42)) == Json(42));
  const BigInt big = BigInt(1) << 80;
  CHECK(int_json(big) == Json(to_string(big)));
}

TEST_CASE("verdict_json fields") {
  const auto j = verdict_json(classify(CoefficientVector::parse("1,3")));
  CHECK(j["verdict"] == "Incomplete");
  CHECK(j["first_failure"] == 3);
  CHECK(j["witness"] == 4);
  CHECK(j["vector"] == Json::array({1, 3}));
  CHECK(j["proof"].is_null());
  CHECK(j["gaps"].size() == j["horizon"].get<std::size_t>());

  const auto c = verdict_json(classify(CoefficientVector::parse("1,1,0,0,0,0,15")));
  CHECK(c["verdict"] == "Complete");
  CHECK(c["proof"]["rule"] == "FamilyDoubleOne");
  CHECK(c["witness"].is_null());
}

TEST_CASE("legal_json and distinct_json") {
  const auto v = CoefficientVector::parse("1,3");
  const auto j = legal_json(v, 9, legal_decompose(v, 9));
  CHECK(j["digits"] == Json::array({1, 2, 0}));
  CHECK(j["terms"] == Json::array({5, 2, 1}));
  CHECK(j["legal"] == true);
  CHECK(distinct_json(v, 9, std::nullopt)["indices"].is_null());
}

TEST_CASE("envelope carries the tool version") {
  const auto e = envelope("gen", Json::object(), Json::object());
  CHECK(e["command"] == "gen");
  CHECK(e["tool_version"] == std::string(kToolVersion));
}

TEST_CASE("csv quoting round trip") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("[1,0,4]") == "\"[1,0,4]\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  const auto rows = parse_csv("a,\"b,c\",\"d\"\"e\"\n1,,3\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(rows[1] == std::vector<std::string>{"1", "", "3"});
}

TEST_CASE("figure csv round trip") {
  const auto rows = figure1_table({1, 3}, {1, 4});
  const auto text = figure_csv(rows);
  CHECK(text.rfind(std::string(kFigureCsvHeader), 0) == 0);
  CHECK(parse_figure_csv(text) == rows);
}

TEST_CASE("census csv round trip and stable json") {
  CensusOptions o;
  const auto report = first_failure_census(3, o);
  const auto text = census_csv(report);
  CHECK(text.rfind(std::string(kCensusCsvHeader), 0) == 0);
  const auto rows = parse_census_csv(text);
  REQUIRE(rows.size() == report.entries.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].vector == report.entries[i].vector.csv());
    CHECK(rows[i].verdict == kind_name(report.entries[i].verdict));
    CHECK(rows[i].proof_tag == report.entries[i].proof_tag);
  }
  CHECK(census_csv(first_failure_census(3, o)) == text);

  CensusOptions par = o;
  par.jobs = 3;
  par.shard_size = 5;
  CHECK(census_json(report, true).dump() == census_json(first_failure_census(3, par), true).dump());
}
