#include "tcgre/jsg.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "tcgre/matching.hpp"
#include "tcgre/trace.hpp"

namespace tcgre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<NodeId> canonical_positions(const std::vector<NodeId>& positions,
                                        const std::vector<NodeId>& goals) {
  std::map<NodeId, std::vector<int>> group;  // goal -> robot indices, ascending
  for (std::size_t r = 0; r < goals.size(); ++r) group[goals[r]].push_back(static_cast<int>(r));
  std::vector<NodeId> canon = positions;
  for (auto& [goal, members] : group) {
    (void)goal;
    if (members.size() < 2) continue;
    std::vector<NodeId> values;
    for (int r : members) values.push_back(positions[r]);
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < members.size(); ++i) canon[members[i]] = values[i];
  }
  return canon;
}

int FullJsg::index_of(const std::vector<NodeId>& positions) const {
  std::vector<NodeId> canon = canonical_positions(positions, goals);
  auto it = std::lower_bound(states.begin(), states.end(), canon);
  if (it == states.end() || *it != canon) return -1;
  return static_cast<int>(it - states.begin());
}

FullJsg build_full_jsg(const SimplifiedGraph& sg, const ProblemInstance& inst,
                       const JsgOptions& options) {
  const int robots = inst.robot_count();
  const std::int64_t m = static_cast<std::int64_t>(sg.super_nodes.size());

  std::int64_t raw_count = 1;
  for (int r = 0; r < robots; ++r) {
    if (raw_count > options.node_budget / std::max<std::int64_t>(m, 1)) {
      throw std::runtime_error("jsg: " + std::to_string(m) + "^" + std::to_string(robots) +
                               " joint states exceed the node budget of " +
                               std::to_string(options.node_budget));
    }
    raw_count *= m;
  }
  if (raw_count > options.node_budget)
    throw std::runtime_error("jsg: " + std::to_string(m) + "^" + std::to_string(robots) +
                             " joint states exceed the node budget of " +
                             std::to_string(options.node_budget));

  FullJsg jsg;
  jsg.goals = inst.goals;

  std::set<std::vector<NodeId>> merged;
  std::vector<int> odo(robots, 0);
  std::vector<NodeId> tuple(robots);
  while (true) {
    for (int r = 0; r < robots; ++r) tuple[r] = sg.super_nodes[odo[r]];
    merged.insert(canonical_positions(tuple, jsg.goals));
    int r = 0;
    while (r < robots) {
      if (++odo[r] < static_cast<int>(m)) break;
      odo[r] = 0;
      ++r;
    }
    if (r == robots) break;
  }
  jsg.states.assign(merged.begin(), merged.end());  // set order == sorted
  return jsg;
}

Solution solve_jsg(const FullJsg& jsg, const SimplifiedGraph& sg, const ProblemInstance& inst,
                   const JsgOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const int robots = inst.robot_count();
  const int state_count = static_cast<int>(jsg.states.size());

  SearchStats stats;
  Solution none;

  const int start = jsg.index_of(inst.starts);
  const int goal = jsg.index_of(inst.goals);
  if (start < 0 || goal < 0) throw std::logic_error("jsg: start or goal state missing");

  std::vector<double> dist(state_count, kInf);
  std::vector<bool> visited(state_count, false);
  std::vector<int> prev(state_count, -1);
  // The raw (robot-indexed) tuple by which each state was cheapest reached;
  // expanding from it keeps robot identities consistent along the chain even
  // though states are merged canonically.
  std::vector<std::vector<NodeId>> reached(state_count);
  std::vector<TraceStep> step_into(state_count);

  dist[start] = 0.0;
  reached[start] = inst.starts;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.emplace(0.0, start);

  // Per-robot move choices are rebuilt per expansion: stay plus every super
  // edge incident to the robot's current node.
  std::vector<std::vector<NodeId>> choices(robots);
  std::vector<int> odo(robots);
  std::vector<NodeId> to(robots);

  // Allocation-free canonical lookup for the inner loop: only goal groups
  // with at least two members ever permute positions.
  std::vector<std::vector<int>> groups;
  {
    std::map<NodeId, std::vector<int>> by_goal;
    for (int r = 0; r < robots; ++r) by_goal[jsg.goals[r]].push_back(r);
    for (auto& [goal, members] : by_goal) {
      (void)goal;
      if (members.size() >= 2) groups.push_back(members);
    }
  }
  std::vector<NodeId> canon_buf(robots), vals_buf;
  auto fast_index_of = [&](const std::vector<NodeId>& positions) {
    canon_buf = positions;
    for (const auto& members : groups) {
      vals_buf.clear();
      for (int r : members) vals_buf.push_back(positions[r]);
      std::sort(vals_buf.begin(), vals_buf.end());
      for (std::size_t i = 0; i < members.size(); ++i) canon_buf[members[i]] = vals_buf[i];
    }
    auto it = std::lower_bound(jsg.states.begin(), jsg.states.end(), canon_buf);
    if (it == jsg.states.end() || *it != canon_buf) return -1;
    return static_cast<int>(it - jsg.states.begin());
  };

  bool solved = false;
  std::int64_t ticks = 0;
  while (!pq.empty()) {
    if (elapsed_since(t0) >= options.deadline_seconds) {
      stats.wall_time_seconds = elapsed_since(t0);
      stats.timed_out = true;
      none.stats = stats;
      return none;
    }
    auto [d, cur] = pq.top();
    pq.pop();
    if (visited[cur]) continue;
    visited[cur] = true;
    ++stats.visited_joint_states;
    if (cur == goal) {
      solved = true;
      break;
    }

    const std::vector<NodeId>& from = reached[cur];
    for (int r = 0; r < robots; ++r) {
      choices[r].clear();
      choices[r].push_back(from[r]);  // stay
      for (int e : sg.edges_at(from[r])) {
        const SuperEdge& se = sg.super_edges[e];
        choices[r].push_back(se.u == from[r] ? se.v : se.u);
      }
    }

    std::fill(odo.begin(), odo.end(), 0);
    while (true) {
      bool someone_moves = false;
      for (int r = 0; r < robots; ++r) {
        to[r] = choices[r][odo[r]];
        if (to[r] != from[r]) someone_moves = true;
      }
      if (someone_moves) {
        if ((++ticks & 0xFFF) == 0 && elapsed_since(t0) >= options.deadline_seconds) {
          stats.wall_time_seconds = elapsed_since(t0);
          stats.timed_out = true;
          none.stats = stats;
          return none;
        }
        JointTransition jt = joint_edge_cost(sg, from, to);
        if (jt.legal()) {
          ++stats.expanded_joint_edges;
          int next = fast_index_of(to);
          if (next >= 0 && !visited[next] && d + jt.cost < dist[next]) {
            dist[next] = d + jt.cost;
            prev[next] = cur;
            reached[next] = to;
            TraceStep step;
            for (int r = 0; r < robots; ++r)
              if (to[r] != from[r]) step.hops.push_back({r, from[r], to[r]});
            step.coordinations = jt.coordinations;
            step_into[next] = std::move(step);
            pq.emplace(dist[next], next);
          }
        }
      }
      int r = 0;
      while (r < robots) {
        if (++odo[r] < static_cast<int>(choices[r].size())) break;
        odo[r] = 0;
        ++r;
      }
      if (r == robots) break;
    }
  }

  stats.wall_time_seconds = elapsed_since(t0);
  if (!solved) {
    none.stats = stats;
    return none;  // goal unreachable in the joint graph
  }

  std::vector<TraceStep> steps;
  for (int s = goal; s != start; s = prev[s]) steps.push_back(step_into[s]);
  std::reverse(steps.begin(), steps.end());
  return reconstruct_paths(sg, inst, steps, stats);
}

}  // namespace tcgre
