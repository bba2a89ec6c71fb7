#pragma once

#include <limits>

#include "tcgre/model.hpp"

// Exhaustive reference solver. Enumerates synchronous joint schedules on the
// original graph, step by step up to a horizon, memoizing the cheapest cost
// of every (step, joint position) pair. At each step every robot either stays
// or crosses one incident edge; any disjoint pairing of a risky-edge crosser
// with a teammate parked on one of that edge's support nodes may be declared
// a coordination, in which case the crosser pays the reduced cost and the
// supporter pays the coordination cost. The optimum is the cheapest cost over
// all steps at which every robot sits on its goal.
//
// Deliberately small and slow: it exists to certify the other solvers on
// tiny instances, so it shares no code with them.

namespace tcgre {

struct OracleLimits {
  int max_robots = 3;
  int max_nodes = 6;
  int max_horizon = 64;
  double deadline_seconds = std::numeric_limits<double>::infinity();
};

// Uses inst.horizon as the schedule length bound, defaulting to
// node_count * robot_count when absent. Throws std::invalid_argument when the
// instance exceeds the limits. Returns an empty-cost Solution when no
// schedule reaches all goals within the horizon.
Solution oracle_solve(const ProblemInstance& inst, const OracleLimits& limits = {});

}  // namespace tcgre
