#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tcgre/model.hpp"

// Reduction of an instance to its simplified graph. Only "special" nodes
// matter for coordination decisions: endpoints and support nodes of the risky
// edges that survive demotion, plus every start and goal. Special nodes
// become super nodes, and each pair of super nodes connected by some path
// free of other special nodes gets a super edge priced at the cheapest such
// path. A risky edge is demoted to an ordinary edge when its supported cost
// (reduced + coordination) is no better than the cheaper of its base cost and
// the unsupported shortest-path cost between its endpoints, because then
// coordination can never pay off there.

namespace tcgre {

struct SuperEdge {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  double base_cost = 0.0;  // cheapest unsupported traversal
  bool risky = false;
  double supported_cost = 0.0;     // reduced + coordination; = base_cost when safe
  std::vector<NodeId> supports;    // empty when safe
  std::vector<NodeId> witness;     // path from u to v realizing base_cost
};

// One (risky super edge, support node) combination.
struct SupportPair {
  NodeId edge_u = 0;
  NodeId edge_v = 0;
  NodeId support_node = 0;
};

struct SimplifiedGraph {
  int original_node_count = 0;
  double coord_cost = 0.0;
  std::vector<NodeId> super_nodes;    // ascending original node ids
  std::vector<SuperEdge> super_edges; // ascending (u, v)

  // Index of the super edge joining a and b, -1 when there is none.
  int edge_index(NodeId a, NodeId b) const;
  // Super edge indices incident to x / risky super edge indices x supports.
  const std::vector<int>& edges_at(NodeId x) const;
  const std::vector<int>& supporting_at(NodeId x) const;
  bool is_super_node(NodeId x) const;

  // Called once by build_simplified after the edge list is final.
  void rebuild_lookups();

 private:
  std::unordered_map<std::uint64_t, int> edge_by_pair_;
  std::unordered_map<NodeId, std::vector<int>> incident_;
  std::unordered_map<NodeId, std::vector<int>> supporting_;
};

// All-pairs shortest path costs over unsupported edge costs
// (Floyd-Warshall); infinity marks unreachable pairs, diagonal is zero.
std::vector<std::vector<double>> all_pairs_spc(const EnvironmentGraph& g);

// Builds the simplified graph. Throws std::runtime_error when some robot's
// goal is unreachable from its start.
SimplifiedGraph build_simplified(const ProblemInstance& inst);

// Every (risky super edge, support node) pair in deterministic order:
// edges by ascending (u, v), support nodes ascending within an edge.
std::vector<SupportPair> enumerate_support_pairs(const SimplifiedGraph& sg);

}  // namespace tcgre
