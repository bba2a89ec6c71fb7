#include "doctest.h"
#include "tcgre/ces.hpp"
#include "tcgre/generate.hpp"
#include "tcgre/io.hpp"
#include "tcgre/simplify.hpp"
#include "test_util.hpp"

using namespace tcgre;

TEST_CASE("plan enumeration solves the hand-checked instance") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);
  Solution sol = ces_solve(sg, inst);

  REQUIRE(sol.found());
  CHECK(*sol.total_cost == 5.0);
  REQUIRE(sol.events.size() == 1);
  CHECK(sol.events[0].receiver == 0);
  CHECK(sol.events[0].supporter == 1);
  CHECK(sol.events[0].support_node == 2);
  CHECK(check_solution(inst, sol).ok());
}

namespace {

// the two variants must agree plan for plan; wall time and work counters may
// differ, so blank the stats before comparing serialized forms
std::string plan_fingerprint(Solution sol) {
  sol.stats = {};
  return serialize_solution(sol);
}

}  // namespace

TEST_CASE("the cached variant reproduces the exact same plan") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);
  Solution a = ces_solve(sg, inst);
  Solution b = hces_solve(sg, inst);
  CHECK(plan_fingerprint(a) == plan_fingerprint(b));
}

TEST_CASE("no risky edges means everyone just walks a shortest path") {
  GenSpec spec;
  spec.node_count = 9;
  spec.agent_count = 3;
  spec.risky_ratio = 0.0;
  spec.seed = 31;
  ProblemInstance inst = generate(spec);
  SimplifiedGraph sg = build_simplified(inst);
  REQUIRE(enumerate_support_pairs(sg).empty());

  Solution sol = ces_solve(sg, inst);
  REQUIRE(sol.found());
  double expect = 0.0;
  for (std::size_t r = 0; r < inst.starts.size(); ++r)
    expect += testutil::exhaustive_spc(inst.graph, inst.starts[r], inst.goals[r]);
  CHECK(*sol.total_cost == expect);
  CHECK(sol.events.empty());
  CHECK(sol.stats.visited_joint_states == 1);  // only the empty plan exists
}

TEST_CASE("forbidding events falls back to independent routing") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);
  CesOptions opt;
  opt.max_events = 0;
  Solution sol = ces_solve(sg, inst);
  Solution capped = ces_solve(sg, inst, opt);
  REQUIRE(capped.found());
  CHECK(*capped.total_cost == 9.0);  // detour 0-2-1 beats the raw 10
  REQUIRE(sol.found());
  CHECK(*sol.total_cost < *capped.total_cost);
}

TEST_CASE("a lone robot can never be supported") {
  ProblemInstance inst = testutil::make_inst_a();
  inst.starts = {0};
  inst.goals = {1};
  SimplifiedGraph sg = build_simplified(inst);
  Solution a = ces_solve(sg, inst);
  Solution b = hces_solve(sg, inst);
  REQUIRE(a.found());
  CHECK(*a.total_cost == 9.0);
  CHECK(a.events.empty());
  CHECK(*b.total_cost == 9.0);
}

TEST_CASE("plan enumeration respects its deadline") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);
  CesOptions opt;
  opt.deadline_seconds = 0.0;
  Solution a = ces_solve(sg, inst, opt);
  CHECK(!a.found());
  CHECK(a.stats.timed_out);
  Solution b = hces_solve(sg, inst, opt);
  CHECK(!b.found());
  CHECK(b.stats.timed_out);
}

TEST_CASE("cached and uncached variants agree plan for plan across a batch") {
  GenSpec spec;
  for (unsigned int seed = 200; seed < 220; ++seed) {
    spec.family = seed % 3 == 0 ? "voronoi" : "random";
    spec.node_count = 8 + static_cast<int>(seed % 3);
    spec.agent_count = 2 + static_cast<int>(seed % 2);
    spec.seed = seed;
    ProblemInstance inst = generate(spec);
    SimplifiedGraph sg = build_simplified(inst);
    Solution a = ces_solve(sg, inst);
    Solution b = hces_solve(sg, inst);
    REQUIRE(a.found());
    CHECK(plan_fingerprint(a) == plan_fingerprint(b));
    CHECK(check_solution(inst, a).ok());
  }
}
