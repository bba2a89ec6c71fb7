#include <cmath>
#include <set>

#include "doctest.h"
#include "tcgre/generate.hpp"
#include "tcgre/simplify.hpp"
#include "test_util.hpp"

using namespace tcgre;

TEST_CASE("all_pairs_spc matches exhaustive path enumeration") {
  ProblemInstance inst = testutil::make_inst_a();
  auto spc = all_pairs_spc(inst.graph);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(spc[a][b] == testutil::exhaustive_spc(inst.graph, a, b));

  GenSpec spec;
  spec.node_count = 8;
  spec.agent_count = 2;
  for (unsigned int seed = 1; seed <= 10; ++seed) {
    spec.seed = seed;
    ProblemInstance g = generate(spec);
    auto table = all_pairs_spc(g.graph);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        CHECK(table[a][b] == testutil::exhaustive_spc(g.graph, a, b));
  }
}

TEST_CASE("simplified graph of the hand-checked instance") {
  ProblemInstance inst = testutil::make_inst_a();
  SimplifiedGraph sg = build_simplified(inst);

  // Every node is special here: risky endpoints 0,1, support 2, start/goals.
  CHECK(sg.super_nodes == std::vector<NodeId>{0, 1, 2, 3});
  CHECK(sg.coord_cost == 1.0);
  REQUIRE(sg.super_edges.size() == 4);

  const int risky_idx = sg.edge_index(0, 1);
  REQUIRE(risky_idx >= 0);
  const SuperEdge& risky = sg.super_edges[risky_idx];
  CHECK(risky.base_cost == 10.0);
  CHECK(risky.risky);
  CHECK(risky.supported_cost == 3.0);
  CHECK(risky.supports == std::vector<NodeId>{2});

  CHECK(sg.super_edges[sg.edge_index(0, 2)].base_cost == 1.0);
  CHECK(sg.super_edges[sg.edge_index(1, 2)].base_cost == 8.0);
  CHECK(sg.super_edges[sg.edge_index(2, 3)].base_cost == 1.0);
  // 0-3 and 1-3 would have to pass through special node 2.
  CHECK(sg.edge_index(0, 3) == -1);
  CHECK(sg.edge_index(1, 3) == -1);

  auto pairs = enumerate_support_pairs(sg);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].edge_u == 0);
  CHECK(pairs[0].edge_v == 1);
  CHECK(pairs[0].support_node == 2);
}

TEST_CASE("a risky edge whose support can never pay off is demoted") {
  ProblemInstance inst = testutil::make_inst_a();
  inst.graph.risky[0].reduced_cost = 9.0;  // supported cost 10 >= min(10, 9)
  SimplifiedGraph sg = build_simplified(inst);

  for (const SuperEdge& e : sg.super_edges) CHECK(!e.risky);
  CHECK(enumerate_support_pairs(sg).empty());

  // With no surviving risky edge, only starts and goals stay special and the
  // 0-1 super edge routes around the expensive direct edge.
  CHECK(sg.super_nodes == std::vector<NodeId>{0, 1, 3});
  const int direct = sg.edge_index(0, 1);
  REQUIRE(direct >= 0);
  CHECK(sg.super_edges[direct].base_cost == 9.0);
  CHECK(sg.super_edges[direct].witness == std::vector<NodeId>{0, 2, 1});
}

TEST_CASE("a risky edge cheaper unsupported than supported is demoted") {
  ProblemInstance inst = testutil::make_inst_a();
  inst.graph.coord_cost = 9.0;  // supported cost 11 >= base 10
  SimplifiedGraph sg = build_simplified(inst);
  for (const SuperEdge& e : sg.super_edges) CHECK(!e.risky);
}

TEST_CASE("build_simplified rejects unreachable goals") {
  ProblemInstance inst;
  inst.graph.node_count = 4;
  inst.graph.edges = {{0, 1, 1.0}, {2, 3, 1.0}};
  inst.graph.coord_cost = 1.0;
  inst.starts = {0};
  inst.goals = {3};
  REQUIRE(validate_instance(inst).ok());
  CHECK_THROWS_AS(build_simplified(inst), std::runtime_error);
}

TEST_CASE("witnesses compose exactly and avoid special interiors") {
  GenSpec spec;
  spec.agent_count = 3;
  for (unsigned int seed = 20; seed < 35; ++seed) {
    for (const char* family : {"random", "voronoi"}) {
      spec.family = family;
      spec.node_count = 10;
      spec.seed = seed;
      ProblemInstance inst = generate(spec);
      SimplifiedGraph sg = build_simplified(inst);
      std::set<NodeId> special(sg.super_nodes.begin(), sg.super_nodes.end());

      for (const SuperEdge& e : sg.super_edges) {
        REQUIRE(e.witness.size() >= 2);
        CHECK(e.witness.front() == e.u);
        CHECK(e.witness.back() == e.v);
        double along = 0.0;
        for (std::size_t i = 0; i + 1 < e.witness.size(); ++i) {
          const Edge* orig = inst.graph.find_edge(e.witness[i], e.witness[i + 1]);
          REQUIRE(orig != nullptr);
          along += orig->cost;
          if (i > 0) CHECK(!special.count(e.witness[i]));
        }
        CHECK(along == e.base_cost);  // exact: all costs sit on the 1/64 grid

        if (e.risky) {
          const RiskySpec* r = inst.graph.find_risky(e.u, e.v);
          REQUIRE(r != nullptr);
          CHECK(e.supported_cost == inst.graph.supported_cost(*r));
          // the witness prices the best unsupported route, which may detour
          // around the risky edge but can never lose to crossing it raw
          CHECK(e.base_cost <= inst.graph.find_edge(e.u, e.v)->cost);
          CHECK(e.supported_cost < e.base_cost);
        }
      }
    }
  }
}

TEST_CASE("super edge costs never beat the unsupported shortest path") {
  GenSpec spec;
  spec.node_count = 9;
  spec.agent_count = 2;
  for (unsigned int seed = 50; seed < 60; ++seed) {
    spec.seed = seed;
    ProblemInstance inst = generate(spec);
    SimplifiedGraph sg = build_simplified(inst);
    auto spc = all_pairs_spc(inst.graph);
    for (const SuperEdge& e : sg.super_edges) {
      CHECK(e.base_cost >= spc[e.u][e.v] - kCostTolerance);
      if (e.risky)
        CHECK(e.supported_cost < std::min(e.base_cost, spc[e.u][e.v]));  // else demoted
    }
  }
}
