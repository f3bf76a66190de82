#include <doctest.h>

#include "dp6/scenario.hpp"

using namespace dp6;

TEST_CASE("scenario fixtures parse and carry the schema tag") {
  for (const char* text : {fixtures::split_rational(), fixtures::cyclic_cubic(),
                           fixtures::quadratic_swap(), fixtures::corrupted_descent()}) {
    Scenario s = parse_scenario(text);
    CHECK(!s.name.empty());
    CHECK(s.field != nullptr);
  }
}

TEST_CASE("malformed scenarios raise ParseError") {
  auto code = [](const std::string& text) {
    try {
      parse_scenario(text);
      return Err::Internal;
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code("{ not json") == Err::ParseError);
  CHECK(code("{}") == Err::ParseError);
  CHECK(code(R"({"schema": "dp6-scenario/1"})") == Err::ParseError);
  CHECK(code(R"({"schema": "nope/9", "field": {}})") == Err::ParseError);
  // floating point numbers are rejected, exactness is the contract
  std::string t = fixtures::split_rational();
  CHECK(code(std::string(R"({"schema": "dp6-scenario/1", "name": "x",
    "field": {"modulus": [0.5, 1], "automorphisms": [[0]]},
    "points": {"triple": [[[1],[0],[0]],[[0],[1],[0]],[[0],[0],[1]]]}})")) == Err::ParseError);
}

TEST_CASE("verify: the three fixtures pass every applicable check") {
  for (const char* text : {fixtures::split_rational(), fixtures::cyclic_cubic(),
                           fixtures::quadratic_swap()}) {
    Scenario s = parse_scenario(text);
    Report rep = run_verify(s);
    CHECK(!rep.any_fail());
  }
}

TEST_CASE("verify: check selection and unknown names") {
  Scenario s = parse_scenario(fixtures::split_rational());
  Report rep = run_verify(s, {"opposite"});
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "opposite");
  CHECK(rep.checks[0].status == "pass");
  CHECK_THROWS_AS(run_verify(s, {"nonsense"}), Error);
}

TEST_CASE("verify: descent passes on the swap fixture and fails when corrupted") {
  Scenario good = parse_scenario(fixtures::quadratic_swap());
  Report rg = run_verify(good, {"descent"});
  REQUIRE(rg.checks.size() == 1);
  CHECK(rg.checks[0].status == "pass");

  Scenario bad = parse_scenario(fixtures::corrupted_descent());
  Report rb = run_verify(bad, {"descent"});
  REQUIRE(rb.checks.size() == 1);
  CHECK(rb.checks[0].status == "fail");
  CHECK(rb.any_fail());
}

TEST_CASE("selftest passes and its JSON is byte-identical across runs") {
  Report a = run_selftest();
  CHECK(!a.any_fail());
  Report b = run_selftest();
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
}

TEST_CASE("construct emits the standard ideal for the split fixture") {
  Scenario s = parse_scenario(fixtures::split_rational());
  Json j = construct_json(s);
  CHECK(j["schema"] == "dp6-surface/1");
  // canonical basis of <xu - yv, yv - zw>: first generator is xu - zw
  CHECK(j["ideal"][0][0][0][0] == "1");
  CHECK(j["ideal"][0][2][2][0] == "-1");
  CHECK(j["ideal"][1][1][1][0] == "1");
  CHECK(j["ideal"][1][2][2][0] == "-1");
  CHECK(j["triangle_field"]["kind"] == "split");
}

TEST_CASE("construct reports the 3-cycle action for the cubic fixture") {
  Scenario s = parse_scenario(fixtures::cyclic_cubic());
  Json j = construct_json(s);
  bool found_cycle = false;
  for (const auto& act : j["hexagon"]["action"])
    if (act["sigma"] == 1 && act["perm"][0] == "E2") found_cycle = true;
  CHECK(found_cycle);
  CHECK(j["triangle_field"]["kind"] == "split");
}

TEST_CASE("report JSON shape is stable") {
  Scenario s = parse_scenario(fixtures::split_rational());
  Report rep = run_verify(s, {"hexagon"});
  Json j = rep.to_json();
  CHECK(j["schema"] == "dp6-report/1");
  CHECK(j["scenario"] == "split-rational");
  CHECK(j["checks"].size() == 1);
  CHECK(j["summary"]["fail"] == 0);
}
