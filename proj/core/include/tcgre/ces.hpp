#pragma once

#include "tcgre/model.hpp"
#include "tcgre/simplify.hpp"

// Coordination-event-sequence baselines. Rather than searching joint states,
// these solvers enumerate plans directly: an ordered sequence of distinct
// (risky super edge, support node) pairs, each assigned a receiver robot and
// a supporter robot. Given a plan, every robot independently routes through
// its assigned duties — a receiver detours to one endpoint of the edge and
// crosses at supported cost (choosing the cheaper direction), a supporter
// detours to the support node and waits for free — and finally heads to its
// goal, all priced by unsupported shortest-path costs. The best plan prefix
// wins; a branch is cut when even the largest conceivable per-event saving
// cannot catch the incumbent.
//
// Because a plan uses each support pair at most once, these solvers are only
// guaranteed optimal on instances whose optimum needs no repeated pair.
//
// ces_solve answers every shortest-path query with a fresh Dijkstra run;
// hces_solve precomputes the all-pairs matrix once and is otherwise
// identical, plan for plan.

namespace tcgre {

struct CesOptions {
  double deadline_seconds = 60.0;
  // Longest plan considered; -1 means the number of support pairs.
  int max_events = -1;
};

// Stats: visited_joint_states counts plans evaluated, expanded_joint_edges
// counts shortest-path queries answered.
Solution ces_solve(const SimplifiedGraph& sg, const ProblemInstance& inst,
                   const CesOptions& options = {});
Solution hces_solve(const SimplifiedGraph& sg, const ProblemInstance& inst,
                    const CesOptions& options = {});

}  // namespace tcgre
