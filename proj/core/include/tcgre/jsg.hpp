#pragma once

#include <cstdint>
#include <vector>

#include "tcgre/model.hpp"
#include "tcgre/simplify.hpp"

// Full joint state graph baseline. Materializes every joint placement of the
// team on the super nodes, then runs plain Dijkstra over joint transitions in
// which any subset of robots moves simultaneously. Joint states that differ
// only by permuting robots with identical goals are merged through a
// canonical form, since homogeneous robots make such states interchangeable.
// Exponential in team size; exists as the exhaustive reference point for the
// dynamic search.

namespace tcgre {

struct JsgOptions {
  std::int64_t node_budget = 2'000'000;  // refuse to build a bigger state set
  double deadline_seconds = 60.0;
};

struct FullJsg {
  // Canonical joint position tuples (one node per robot), sorted; a state's
  // index in this list is its identity everywhere else.
  std::vector<std::vector<NodeId>> states;
  std::vector<NodeId> goals;  // per robot, fixed by the instance

  std::int64_t state_count() const { return static_cast<std::int64_t>(states.size()); }
  // Index of the canonical form of `positions`, -1 when absent.
  int index_of(const std::vector<NodeId>& positions) const;
};

// Canonical form: robots sharing a goal exchange their positions so that,
// per goal group, positions appear in ascending order of robot index.
std::vector<NodeId> canonical_positions(const std::vector<NodeId>& positions,
                                        const std::vector<NodeId>& goals);

// Enumerates all |super nodes|^robots joint placements (merged canonically).
// Throws std::runtime_error when that count exceeds options.node_budget.
FullJsg build_full_jsg(const SimplifiedGraph& sg, const ProblemInstance& inst,
                       const JsgOptions& options = {});

// Dijkstra over the full joint state graph. Stats count popped states
// (visited) and legal joint transitions priced (expanded).
Solution solve_jsg(const FullJsg& jsg, const SimplifiedGraph& sg, const ProblemInstance& inst,
                   const JsgOptions& options = {});

}  // namespace tcgre
