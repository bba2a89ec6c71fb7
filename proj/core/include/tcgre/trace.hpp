#pragma once

#include <vector>

#include "tcgre/matching.hpp"
#include "tcgre/model.hpp"
#include "tcgre/simplify.hpp"

// Turning a schedule found on the simplified graph back into full paths on
// the original graph. Solvers record one TraceStep per joint transition; the
// reconstruction expands every unsupported super-edge hop into its witness
// path, keeps supported hops on the risky edge itself, numbers coordination
// events globally, and recomputes per-robot costs under the reassignment
// convention (receiver pays reduced + coordination cost, supporter pays
// nothing for the act of supporting).

namespace tcgre {

struct TraceStep {
  struct Hop {
    int robot = 0;
    NodeId from = 0;
    NodeId to = 0;
  };
  std::vector<Hop> hops;  // ascending robot id; staying robots are omitted
  // Coordinations taken on this step; receiver/supporter are robot ids.
  std::vector<JointTransition::Coordination> coordinations;
};

// Throws std::logic_error when a hop does not correspond to a super edge:
// that would mean the calling search corrupted its bookkeeping.
Solution reconstruct_paths(const SimplifiedGraph& sg, const ProblemInstance& inst,
                           const std::vector<TraceStep>& steps, const SearchStats& stats);

}  // namespace tcgre
