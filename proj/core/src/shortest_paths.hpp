#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tcgre/model.hpp"

// Internal single-source shortest path helpers on the original graph, always
// over unsupported (full) edge costs. Not installed.

namespace tcgre::detail {

struct Adjacency {
  // out[u] = (neighbor, cost) pairs sorted by neighbor id.
  std::vector<std::vector<std::pair<NodeId, double>>> out;

  explicit Adjacency(const EnvironmentGraph& g);
};

using NodeFilter = std::function<bool(NodeId)>;

// Distances from `source`. Nodes failing `can_pass_through` may terminate a
// path but not continue one, which restricts results to paths whose interior
// nodes all pass the filter. A null filter admits every node.
std::vector<double> dijkstra(const Adjacency& adj, NodeId source,
                             const NodeFilter& can_pass_through = nullptr);

// The lexicographically smallest minimum-cost simple path from u to v whose
// interior nodes pass the filter; empty when v is unreachable.
std::vector<NodeId> lex_shortest_path(const Adjacency& adj, NodeId u, NodeId v,
                                      const NodeFilter& can_pass_through = nullptr);

}  // namespace tcgre::detail
