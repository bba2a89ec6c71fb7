#include <random>

#include "doctest.h"
#include "tcgre/matching.hpp"
#include "tcgre/simplify.hpp"
#include "test_util.hpp"

using namespace tcgre;

TEST_CASE("matching equals brute force on random rectangular instances") {
  std::mt19937 rng(7);
  const double choices[] = {kNoPair, 0.0, 0.5, 1.0, 2.0, 3.25};
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    MatchingInstance m;
    m.weights.assign(rows, std::vector<double>(cols));
    for (auto& row : m.weights)
      for (double& w : row) w = choices[rng() % 6];

    Matching got = max_weight_matching(m);
    CHECK(got.total_reduction == doctest::Approx(testutil::brute_matching(m.weights))
                                     .epsilon(1e-12));

    // The reported pairs must reproduce the total and be strictly positive.
    double sum = 0.0;
    for (auto [i, j] : got.pairs) {
      CHECK(m.weights[i][j] > 0.0);
      sum += m.weights[i][j];
    }
    CHECK(sum == doctest::Approx(got.total_reduction).epsilon(1e-12));
  }
}

TEST_CASE("ties resolve to the lexicographically smallest pair set") {
  MatchingInstance m;
  m.weights = {{1.0, 1.0}, {1.0, 1.0}};
  Matching got = max_weight_matching(m);
  CHECK(got.total_reduction == 2.0);
  CHECK(got.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});

  m.weights = {{2.0, 2.0}};
  got = max_weight_matching(m);
  CHECK(got.pairs == std::vector<std::pair<int, int>>{{0, 0}});

  // Row 0 must give way: pairing it with column 0 would cost the total.
  m.weights = {{1.0, kNoPair}, {5.0, kNoPair}};
  got = max_weight_matching(m);
  CHECK(got.total_reduction == 5.0);
  CHECK(got.pairs == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("non-positive weights never enter a matching") {
  MatchingInstance m;
  m.weights = {{0.0}};
  CHECK(max_weight_matching(m).pairs.empty());
  m.weights = {{kNoPair}};
  CHECK(max_weight_matching(m).pairs.empty());
  m.weights = {{-2.0, 1.0}};
  Matching got = max_weight_matching(m);
  CHECK(got.pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(got.total_reduction == 1.0);
}

TEST_CASE("degenerate matching shapes") {
  MatchingInstance m;  // empty
  CHECK(max_weight_matching(m).total_reduction == 0.0);
  m.weights = {{}, {}};  // rows with no columns
  CHECK(max_weight_matching(m).total_reduction == 0.0);
}

TEST_CASE("joint transition pricing on the hand-checked instance") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);

  SUBCASE("supported crossing extracts the support pair") {
    JointTransition t = joint_edge_cost(sg, {0, 2}, {1, 2});
    REQUIRE(t.legal());
    CHECK(t.cost == 3.0);
    REQUIRE(t.coordinations.size() == 1);
    CHECK(t.coordinations[0].receiver == 0);
    CHECK(t.coordinations[0].supporter == 1);
    CHECK(t.coordinations[0].support_node == 2);
    CHECK(t.coordinations[0].edge == sg.edge_index(0, 1));
  }
  SUBCASE("no supporter in place means full price") {
    JointTransition t = joint_edge_cost(sg, {0, 3}, {1, 3});
    REQUIRE(t.legal());
    CHECK(t.cost == 10.0);
    CHECK(t.coordinations.empty());
  }
  SUBCASE("standing still is free") {
    JointTransition t = joint_edge_cost(sg, {0, 3}, {0, 3});
    REQUIRE(t.legal());
    CHECK(t.cost == 0.0);
  }
  SUBCASE("hop without a super edge is illegal") {
    CHECK(!joint_edge_cost(sg, {0, 3}, {3, 3}).legal());
  }
  SUBCASE("mover cannot support") {
    // Robot 1 crosses 2-3 while robot 0 crosses the risky edge: both move,
    // nobody stands on the support node, so no discount applies.
    JointTransition t = joint_edge_cost(sg, {0, 2}, {1, 3});
    REQUIRE(t.legal());
    CHECK(t.cost == 11.0);
    CHECK(t.coordinations.empty());
  }
}

TEST_CASE("one stayer cannot support two receivers at once") {
  // Two risky edges sharing support node 4; three robots: two receivers and
  // one supporter. Only one crossing can be discounted per transition.
  ProblemInstance inst;
  inst.graph.node_count = 5;
  inst.graph.edges = {{0, 1, 10.0}, {2, 3, 20.0}, {0, 4, 1.0}, {2, 4, 1.0}, {1, 3, 1.0}};
  inst.graph.risky = {{0, 1, 1.0, {4}}, {2, 3, 1.0, {4}}};
  inst.graph.coord_cost = 1.0;
  inst.starts = {0, 2, 4};
  inst.goals = {1, 3, 4};
  REQUIRE(validate_instance(inst).ok());
  SimplifiedGraph sg = build_simplified(inst);

  JointTransition t = joint_edge_cost(sg, {0, 2, 4}, {1, 3, 4});
  REQUIRE(t.legal());
  // The matching prefers discounting the 20-cost edge: 10 + (1+1) = 12.
  CHECK(t.cost == 12.0);
  REQUIRE(t.coordinations.size() == 1);
  CHECK(t.coordinations[0].receiver == 1);
  CHECK(t.coordinations[0].supporter == 2);
}
