#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "tcgre/simplify.hpp"

// Pricing of one joint transition in a joint state graph. When several
// robots move at once, robots that stay on support nodes can each support at
// most one robot crossing a risky super edge, and every crosser can accept at
// most one supporter, so choosing who supports whom is a maximum-weight
// bipartite matching between stayers and risky movers. The weight of a pair
// is the cost reduction it achieves: the edge's base cost minus its supported
// cost.

namespace tcgre {

// Marks a (stayer, mover) combination that is not allowed to coordinate.
inline constexpr double kNoPair = -std::numeric_limits<double>::infinity();

struct MatchingInstance {
  // weights[i][j] = reduction when stayer i supports mover j; kNoPair when
  // stayer i is not on a support node of mover j's edge. Rectangular.
  std::vector<std::vector<double>> weights;
};

struct Matching {
  // (stayer index, mover index) pairs, sorted lexicographically. Pairs whose
  // weight is not strictly positive are never included.
  std::vector<std::pair<int, int>> pairs;
  double total_reduction = 0.0;
};

// Hungarian algorithm on a zero-padded square matrix, O(n^3). Among all
// maximum-weight matchings, returns the one whose pair set is
// lexicographically smallest, which keeps every caller deterministic.
Matching max_weight_matching(const MatchingInstance& m);

// A joint transition: every robot either stays or crosses one super edge.
struct JointTransition {
  struct Coordination {
    int receiver = 0;        // index into the position vectors
    int supporter = 0;
    int edge = 0;            // super edge index in the simplified graph
    NodeId support_node = 0;
  };
  double cost = std::numeric_limits<double>::infinity();
  std::vector<Coordination> coordinations;  // ascending by receiver

  bool legal() const { return std::isfinite(cost); }
};

// Prices the transition from per-robot positions `from` to `to` (parallel
// vectors over super nodes): the sum of the movers' base costs minus the
// best total reduction from pairing staying robots with risky movers.
// Returns an illegal transition when some hop is not a super edge.
JointTransition joint_edge_cost(const SimplifiedGraph& sg, const std::vector<NodeId>& from,
                                const std::vector<NodeId>& to);

}  // namespace tcgre
