#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tcgre/matching.hpp"
#include "tcgre/model.hpp"
#include "tcgre/simplify.hpp"

// Dynamic joint-state search: Dijkstra over joint states of the simplified
// graph that are materialized lazily, one expansion at a time, instead of
// enumerating the exponential full joint graph up front. Transitions involve
// at most two robots — a single robot crossing one super edge, a pair in
// which one robot crosses a risky super edge while the other provides support
// from one of its support nodes, or a pair crossing independently — because
// any synchronous many-robot move decomposes into such steps at equal cost.
//
// A robot standing on its goal may retire through an explicit zero-cost
// transition that removes it from the active set. Retirement being optional
// (rather than forced on arrival) matters: a robot already at its goal can
// still walk away to support a teammate, or keep standing on a support node
// it happens to share with its goal. The literal retire-on-arrival behaviour
// is available behind auto_retire for comparison and can be strictly worse.
//
// The search itself leans on two cost-preserving reductions. Because
// independent pair moves decompose into two single moves of equal total cost,
// and a run of zero-cost retirements commutes with everything after it, the
// search expands only single moves and supported crossings and treats "every
// robot stands on its goal" as the terminal state, retiring the whole team in
// the reported schedule's final step; the full transition relation stays
// available through neighbors_2agent (and pair_moves restores the pair moves
// inside the search, at a cost). Expansion order is cost-so-far plus a
// per-robot lower bound on the distance to goal (shortest paths over super
// edges priced at the cheapest rate anyone could pay), which never
// overestimates, so the first terminal expansion is still the optimum —
// identical results, far fewer expansions.
//
// Joint states that differ only by permuting robots with identical goals are
// merged; the merge key is the multiset of (retired flag, position, goal)
// triples.

namespace tcgre {

struct HjsgOptions {
  double deadline_seconds = 60.0;
  bool auto_retire = false;  // retire every robot the moment it stands on its goal
  bool pair_moves = false;   // also expand non-coordinating simultaneous pair moves
};

struct ActiveJointState {
  // Robots still in play and their super node.
  std::map<int, NodeId> active;
  // Robots that retired, with the cost they had accumulated. Neighbor
  // enumeration records 0 for a fresh retiree; real values are attributed
  // when a finished search reconstructs its schedule.
  std::map<int, double> retired_costs;

  bool terminal() const { return active.empty(); }
};

struct JointSuccessor {
  ActiveJointState state;
  double cost = 0.0;  // transition cost
  // Present when the transition is a supported crossing; robot ids.
  std::optional<JointTransition::Coordination> coordination;
  // Present when the transition retires a robot (explicit mode only).
  std::optional<int> retired_robot;
};

// All successors of `s`: zero-cost retirements of robots standing on their
// goals, single super-edge moves, supported crossings of each active pair,
// and independent pair moves. Successors reaching the same merged state are
// deduplicated keeping the cheapest transition, so a supported crossing
// shadows the unsupported crossing of the same risky edge. Deterministic
// order: ascending robot id, then edge index.
std::vector<JointSuccessor> neighbors_2agent(const SimplifiedGraph& sg,
                                             const std::vector<NodeId>& goals,
                                             const ActiveJointState& s,
                                             const HjsgOptions& options = {});

// Runs the search. Stats: visited_joint_states counts expanded (popped)
// states, expanded_joint_edges counts successor transitions enumerated.
Solution dynamic_hjsg_search(const SimplifiedGraph& sg, const ProblemInstance& inst,
                             const HjsgOptions& options = {});

}  // namespace tcgre
