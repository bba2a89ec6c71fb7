#include "doctest.h"
#include "tcgre/hjsg.hpp"
#include "tcgre/model.hpp"
#include "tcgre/simplify.hpp"
#include "test_util.hpp"

using namespace tcgre;

TEST_CASE("validate_instance accepts a well-formed instance") {
  ProblemInstance inst = testutil::make_inst_a();
  CHECK(validate_instance(inst).ok());
  inst.horizon = 8;
  CHECK(validate_instance(inst).ok());
}

TEST_CASE("validate_instance flags structural problems") {
  auto broken = [](auto&& tweak) {
    ProblemInstance inst = testutil::make_inst_a();
    tweak(inst);
    return !validate_instance(inst).ok();
  };

  CHECK(broken([](ProblemInstance& i) { i.graph.edges[0].v = 7; }));   // endpoint range
  CHECK(broken([](ProblemInstance& i) { i.graph.edges[0].v = 0; }));   // self loop
  CHECK(broken([](ProblemInstance& i) { i.graph.edges.push_back({0, 1, 3.0}); }));  // dup
  CHECK(broken([](ProblemInstance& i) { i.graph.edges[0].cost = -1.0; }));
  CHECK(broken([](ProblemInstance& i) { i.graph.risky[0].u = 1; i.graph.risky[0].v = 3; }));
  CHECK(broken([](ProblemInstance& i) { i.graph.risky[0].reduced_cost = 11.0; }));
  CHECK(broken([](ProblemInstance& i) { i.graph.risky[0].supports.clear(); }));
  CHECK(broken([](ProblemInstance& i) { i.graph.risky[0].supports = {2, 2}; }));
  CHECK(broken([](ProblemInstance& i) { i.graph.risky[0].supports = {9}; }));
  CHECK(broken([](ProblemInstance& i) { i.graph.risky.push_back(i.graph.risky[0]); }));
  CHECK(broken([](ProblemInstance& i) { i.graph.coord_cost = -0.5; }));
  CHECK(broken([](ProblemInstance& i) { i.starts[0] = -1; }));
  CHECK(broken([](ProblemInstance& i) { i.goals[1] = 4; }));
  CHECK(broken([](ProblemInstance& i) { i.goals.pop_back(); }));  // starts/goals mismatch
  CHECK(broken([](ProblemInstance& i) { i.starts.clear(); i.goals.clear(); }));
  CHECK(broken([](ProblemInstance& i) { i.horizon = 0; }));
}

TEST_CASE("check_solution accepts a correct schedule and its cost breakdown") {
  ProblemInstance inst = testutil::make_inst_a();

  Solution sol;
  sol.paths = {{{0, 0.0}, {1, 3.0}}, {{3, 0.0}, {2, 1.0}, {3, 2.0}}};
  sol.events = {{0, 0, 1, 0, 1, 2}};
  sol.robot_costs = {3.0, 2.0};
  sol.total_cost = 5.0;
  CHECK(check_solution(inst, sol).ok());
}

TEST_CASE("check_solution accepts an empty result but not a half-empty one") {
  ProblemInstance inst = testutil::make_inst_a();

  Solution none;
  CHECK(check_solution(inst, none).ok());

  none.paths = {{{0, 0.0}, {1, 3.0}}};  // paths without a total cost
  CHECK(!check_solution(inst, none).ok());
}

TEST_CASE("check_solution rejects tampered schedules") {
  ProblemInstance inst = testutil::make_inst_a();

  Solution good;
  good.paths = {{{0, 0.0}, {1, 3.0}}, {{3, 0.0}, {2, 1.0}, {3, 2.0}}};
  good.events = {{0, 0, 1, 0, 1, 2}};
  good.robot_costs = {3.0, 2.0};
  good.total_cost = 5.0;
  REQUIRE(check_solution(inst, good).ok());

  SUBCASE("wrong total") {
    good.total_cost = 4.0;
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("wrong per-robot cost") {
    good.robot_costs = {2.0, 3.0};
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("path does not start at the start") {
    good.paths[0][0].node = 2;
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("path does not end at the goal") {
    good.paths[1].pop_back();
    good.robot_costs[1] = 1.0;
    good.total_cost = 4.0;
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("teleporting hop") {
    good.paths[1][1].node = 1;  // 3 -> 1 is not an edge
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("claimed discount without a supporter in position") {
    good.paths[1] = {{3, 0.0}};  // supporter stays home, event kept
    good.robot_costs[1] = 0.0;
    good.total_cost = 3.0;
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("event on a safe edge") {
    good.events[0] = {0, 1, 0, 2, 3, 2};
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("receiver supporting itself") {
    good.events[0].supporter = 0;
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("event order not starting at zero") {
    good.events[0].time_order = 1;
    CHECK(!check_solution(inst, good).ok());
  }
  SUBCASE("unsupported crossing priced at full cost passes") {
    good.paths = {{{0, 0.0}, {2, 1.0}, {1, 9.0}}, {{3, 0.0}}};
    good.events = {};
    good.robot_costs = {9.0, 0.0};
    good.total_cost = 9.0;
    CHECK(check_solution(inst, good).ok());
  }
}

TEST_CASE("check_solution rejects a double-booked robot at one time order") {
  // Two risky edges, one robot trying to both receive and support in the
  // same numbered slot.
  ProblemInstance inst;
  inst.graph.node_count = 4;
  inst.graph.edges = {{0, 1, 10.0}, {2, 3, 10.0}, {0, 2, 1.0}, {1, 3, 1.0}};
  inst.graph.risky = {{0, 1, 1.0, {2}}, {2, 3, 1.0, {1}}};
  inst.graph.coord_cost = 1.0;
  inst.starts = {0, 2};
  inst.goals = {1, 3};
  REQUIRE(validate_instance(inst).ok());

  Solution sol;
  sol.paths = {{{0, 0.0}, {1, 2.0}}, {{2, 0.0}, {3, 2.0}}};
  sol.events = {{0, 0, 1, 0, 1, 2}, {0, 1, 0, 2, 3, 1}};
  sol.robot_costs = {2.0, 2.0};
  sol.total_cost = 4.0;
  CHECK(!check_solution(inst, sol).ok());

  // Spread over two orders the same story is fine: robot 1 supports from its
  // start before crossing, robot 0 supports from its goal after crossing.
  sol.events[1].time_order = 1;
  CHECK(check_solution(inst, sol).ok());

  // But not in the other order, which needs each robot to support a crossing
  // it has already walked away from.
  sol.events[0].time_order = 1;
  sol.events[1].time_order = 0;
  CHECK(!check_solution(inst, sol).ok());
}

TEST_CASE("find_edge and find_risky are order-insensitive") {
  ProblemInstance inst = testutil::make_inst_a();
  CHECK(inst.graph.find_edge(1, 0) != nullptr);
  CHECK(inst.graph.find_edge(0, 3) == nullptr);
  CHECK(inst.graph.find_risky(1, 0) != nullptr);
  CHECK(inst.graph.find_risky(0, 2) == nullptr);
  CHECK(inst.graph.supported_cost(inst.graph.risky[0]) == 3.0);
}
