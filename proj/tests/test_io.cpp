#include <string>

#include "doctest.h"
#include "tcgre/hjsg.hpp"
#include "tcgre/io.hpp"
#include "tcgre/simplify.hpp"
#include "test_util.hpp"

using namespace tcgre;

TEST_CASE("instance serialization round-trips byte for byte") {
  ProblemInstance inst = testutil::make_inst_a();
  inst.horizon = 8;
  const std::string first = serialize_instance(inst);
  const std::string second = serialize_instance(load_instance(first));
  CHECK(first == second);
}

TEST_CASE("edge endpoints are normalized on load") {
  const std::string doc = R"({
    "nodes": 3,
    "edges": [[1, 0, 2.0], [2, 1, 1.0]],
    "risky": [],
    "coord_cost": 1.0,
    "robots": [{"start": 0, "goal": 2}]
  })";
  ProblemInstance inst = load_instance(doc);
  CHECK(inst.graph.edges[0].u == 0);
  CHECK(inst.graph.edges[0].v == 1);
  CHECK(inst.graph.edges[1].u == 1);
  CHECK(!inst.horizon.has_value());
}

TEST_CASE("instance parse errors name the offending part") {
  CHECK_THROWS_AS(load_instance(""), std::runtime_error);
  CHECK_THROWS_AS(load_instance("[]"), std::runtime_error);
  CHECK_THROWS_WITH_AS(load_instance("{}"), doctest::Contains("nodes"), std::runtime_error);

  const std::string no_robots = R"({
    "nodes": 2, "edges": [[0,1,1.0]], "risky": [], "coord_cost": 1.0
  })";
  CHECK_THROWS_WITH_AS(load_instance(no_robots), doctest::Contains("robots"),
                       std::runtime_error);

  const std::string dup = R"({
    "nodes": 2, "edges": [[0,1,1.0],[1,0,2.0]], "risky": [], "coord_cost": 1.0,
    "robots": [{"start": 0, "goal": 1}]
  })";
  CHECK_THROWS_WITH_AS(load_instance(dup), doctest::Contains("duplicate edge"),
                       std::runtime_error);
}

TEST_CASE("solution serialization round-trips and stays checkable") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);
  Solution sol = dynamic_hjsg_search(sg, inst);
  REQUIRE(sol.found());

  const std::string text = serialize_solution(sol);
  Solution back = load_solution(text);
  CHECK(serialize_solution(back) == text);
  CHECK(check_solution(inst, back).ok());
  CHECK(back.stats.visited_joint_states == sol.stats.visited_joint_states);
}

TEST_CASE("a no-schedule solution serializes with a null total") {
  Solution none;
  none.stats.timed_out = true;
  const std::string text = serialize_solution(none);
  CHECK(text.find("null") != std::string::npos);
  Solution back = load_solution(text);
  CHECK(!back.found());
  CHECK(back.stats.timed_out);
}
