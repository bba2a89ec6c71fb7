#include "shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace tcgre::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Adjacency::Adjacency(const EnvironmentGraph& g) : out(g.node_count) {
  for (const Edge& e : g.edges) {
    out[e.u].emplace_back(e.v, e.cost);
    out[e.v].emplace_back(e.u, e.cost);
  }
  for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
}

std::vector<double> dijkstra(const Adjacency& adj, NodeId source,
                             const NodeFilter& can_pass_through) {
  std::vector<double> dist(adj.out.size(), kInf);
  dist[source] = 0.0;
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.emplace(0.0, source);
  std::vector<bool> done(adj.out.size(), false);
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (done[x]) continue;
    done[x] = true;
    if (x != source && can_pass_through && !can_pass_through(x)) continue;
    for (auto [w, c] : adj.out[x]) {
      if (d + c < dist[w]) {
        dist[w] = d + c;
        pq.emplace(dist[w], w);
      }
    }
  }
  return dist;
}

std::vector<NodeId> lex_shortest_path(const Adjacency& adj, NodeId u, NodeId v,
                                      const NodeFilter& can_pass_through) {
  if (u == v) return {u};
  std::vector<double> from_u = dijkstra(adj, u, can_pass_through);
  if (!std::isfinite(from_u[v])) return {};
  std::vector<double> to_v = dijkstra(adj, v, can_pass_through);
  const double total = from_u[v];

  // Depth-first walk taking the smallest neighbor that still lies on some
  // minimum-cost path; backtracks past dead ends caused by the simple-path
  // requirement. First complete path found is the lexicographically smallest.
  std::vector<NodeId> path = {u};
  std::vector<bool> on_path(adj.out.size(), false);
  on_path[u] = true;
  std::function<bool(NodeId, double)> walk = [&](NodeId x, double g) -> bool {
    if (x == v) return true;
    for (auto [w, c] : adj.out[x]) {
      if (on_path[w]) continue;
      if (w != v && can_pass_through && !can_pass_through(w)) continue;
      if (std::abs(g + c + to_v[w] - total) > kCostTolerance) continue;
      path.push_back(w);
      on_path[w] = true;
      if (walk(w, g + c)) return true;
      on_path[w] = false;
      path.pop_back();
    }
    return false;
  };
  if (!walk(u, 0.0)) return {};
  return path;
}

}  // namespace tcgre::detail
