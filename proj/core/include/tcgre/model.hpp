#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Core data model for team coordination on graphs with risky edges.
//
// A team of homogeneous robots moves on an undirected graph. A subset of the
// edges is "risky": traversing a risky edge normally costs its full edge cost,
// but if a teammate is parked on one of the edge's designated support nodes
// during the traversal, the traversal costs the edge's reduced cost while the
// supporter incurs a fixed coordination cost. Staying in place is free and
// robots never block each other. The objective is to deliver every robot from
// its start to its goal at minimum total cost.
//
// All types in this header are plain values; nothing mutates them after
// construction, so they can be shared freely across threads.

namespace tcgre {

using NodeId = int;

// Tolerance used whenever two independently computed costs are compared.
inline constexpr double kCostTolerance = 1e-9;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double cost = 0.0;
};

// A risky edge together with its reduced (supported) traversal cost and the
// nodes from which a teammate can provide support.
struct RiskySpec {
  NodeId u = 0;
  NodeId v = 0;
  double reduced_cost = 0.0;
  std::vector<NodeId> supports;
};

struct EnvironmentGraph {
  int node_count = 0;
  std::vector<Edge> edges;    // endpoints stored with u < v
  std::vector<RiskySpec> risky;
  double coord_cost = 0.0;    // cost charged for one act of support

  // Returns nullptr if the (unordered) pair is not an edge / not risky.
  const Edge* find_edge(NodeId a, NodeId b) const;
  const RiskySpec* find_risky(NodeId a, NodeId b) const;

  // Effective cost of a supported traversal after the supporter's
  // coordination cost has been reassigned to the receiver.
  double supported_cost(const RiskySpec& r) const {
    return r.reduced_cost + coord_cost;
  }
};

struct ProblemInstance {
  EnvironmentGraph graph;
  std::vector<NodeId> starts;  // starts[n] = start node of robot n
  std::vector<NodeId> goals;   // goals[n] = goal node of robot n
  // Optional schedule-length bound; only the exhaustive reference solver
  // consumes it. Harnesses conventionally set node_count * robot_count.
  std::optional<int> horizon;

  int robot_count() const { return static_cast<int>(starts.size()); }
};

// One node visit on a robot's path, with the robot's accumulated cost after
// arriving there. The first entry of every path carries cost 0.
struct PathEntry {
  NodeId node = 0;
  double cost_to_date = 0.0;
};

// One act of coordination: at global order `time_order`, robot `receiver`
// crossed risky edge (edge_from, edge_to) while robot `supporter` sat on
// `support_node`. Orders are consecutive integers starting at 0.
struct CoordinationEvent {
  int time_order = 0;
  int receiver = 0;
  int supporter = 0;
  NodeId edge_from = 0;
  NodeId edge_to = 0;
  NodeId support_node = 0;
};

struct SearchStats {
  std::int64_t visited_joint_states = 0;   // states expanded / plans evaluated
  std::int64_t expanded_joint_edges = 0;   // successor evaluations
  double wall_time_seconds = 0.0;
  bool timed_out = false;
};

// Result of any solver. When no schedule was produced (timeout or an
// unreachable goal) total_cost is empty and paths/events/robot_costs are
// empty as well. Per-robot costs use the reassignment convention: a receiver
// is charged reduced cost plus coordination cost for a supported hop and the
// supporter is charged nothing, so the team total is unchanged.
struct Solution {
  std::vector<std::vector<PathEntry>> paths;  // paths[n] = path of robot n
  std::vector<CoordinationEvent> events;
  std::vector<double> robot_costs;
  std::optional<double> total_cost;  // always the sum of robot_costs
  SearchStats stats;

  bool found() const { return total_cost.has_value(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural validation of an instance: endpoint ranges, duplicate edges,
// risky entries referencing real edges, reduced cost not above the base
// cost, nonnegative finite costs, start/goal ranges, positive horizon.
ValidationReport validate_instance(const ProblemInstance& inst);

// Validates a claimed solution against the original problem semantics:
// paths walk real edges, supporters are in position when a receiver crosses,
// no robot takes part in two events of the same order, and all stated costs
// (per entry, per robot, total) are consistent with a recomputation. An empty
// report means the solution is accepted. Solutions without a total cost are
// accepted only if they carry no paths or events.
ValidationReport check_solution(const ProblemInstance& inst, const Solution& sol);

}  // namespace tcgre
