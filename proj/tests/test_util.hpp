#pragma once

// Shared helpers for the test suite: a tiny hand-checked instance and
// deliberately naive reference implementations that share no code with the
// library (they exist to catch the library lying to itself).

#include <algorithm>
#include <limits>
#include <vector>

#include "tcgre/model.hpp"

namespace testutil {

// Four nodes, one risky edge with a single support node, two robots.
//
//      0 ---10--- 1        risky (0,1): reduced 2, support {2}
//      |         /         coordination cost 1
//      1        8
//      |       /
//      2 -----             robot 0: 0 -> 1
//      |                   robot 1: 3 -> 3
//      1
//      |
//      3
//
// Optimal total is 5: robot 1 walks 3-2 (1), supports robot 0 across (0,1)
// (robot 0 pays 2+1=3), walks back 2-3 (1). Unsupported best is 9 (0-2-1).
inline tcgre::ProblemInstance make_inst_a() {
  tcgre::ProblemInstance inst;
  inst.graph.node_count = 4;
  inst.graph.edges = {{0, 1, 10.0}, {0, 2, 1.0}, {1, 2, 8.0}, {2, 3, 1.0}};
  inst.graph.risky = {{0, 1, 2.0, {2}}};
  inst.graph.coord_cost = 1.0;
  inst.starts = {0, 3};
  inst.goals = {1, 3};
  return inst;
}

// Unsupported shortest-path cost by enumerating every simple path.
inline double exhaustive_spc(const tcgre::EnvironmentGraph& g, tcgre::NodeId from,
                             tcgre::NodeId to) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<bool> used(g.node_count, false);
  double best = inf;
  auto walk = [&](auto&& self, tcgre::NodeId at, double cost) -> void {
    if (cost >= best) return;
    if (at == to) {
      best = cost;
      return;
    }
    used[at] = true;
    for (const tcgre::Edge& e : g.edges) {
      if (e.u != at && e.v != at) continue;
      const tcgre::NodeId next = e.u == at ? e.v : e.u;
      if (!used[next]) self(self, next, cost + e.cost);
    }
    used[at] = false;
  };
  walk(walk, from, 0.0);
  return best;
}

// Maximum-weight matching by trying every assignment of rows to distinct
// columns (or to nothing). Weights that are not strictly positive never help
// a maximum, so this is comparable with the library's matching contract.
inline double brute_matching(const std::vector<std::vector<double>>& w) {
  const int rows = static_cast<int>(w.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(w[0].size());
  std::vector<bool> taken(cols, false);
  auto go = [&](auto&& self, int row) -> double {
    if (row == rows) return 0.0;
    double best = self(self, row + 1);  // row stays unmatched
    for (int c = 0; c < cols; ++c) {
      if (taken[c] || !(w[row][c] > 0.0)) continue;
      taken[c] = true;
      best = std::max(best, w[row][c] + self(self, row + 1));
      taken[c] = false;
    }
    return best;
  };
  return go(go, 0);
}

// Plain BFS connectivity over an edge list.
inline bool connected_graph(int nodes, const std::vector<tcgre::Edge>& edges) {
  if (nodes <= 0) return false;
  std::vector<std::vector<int>> adj(nodes);
  for (const tcgre::Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(nodes, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == nodes;
}

}  // namespace testutil
