#include "tcgre/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tcgre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Pairing {
  int receiver;
  int supporter;
  const RiskySpec* risky;
};

struct Reached {
  double cost = kInf;
  int prev_positions = -1;           // encoded positions one step earlier
  std::vector<Pairing> pairings;     // coordinations taken on that step
};

// One robot's options for a single step: stay or cross an incident edge.
struct Move {
  NodeId to;
  double cost;                 // full edge cost; 0 for a stay
  const RiskySpec* risky;      // non-null when the hop is a risky edge
};

}  // namespace

Solution oracle_solve(const ProblemInstance& inst, const OracleLimits& limits) {
  const auto t0 = std::chrono::steady_clock::now();
  const EnvironmentGraph& g = inst.graph;
  const int robots = inst.robot_count();
  const int nodes = g.node_count;
  const int horizon = inst.horizon.value_or(nodes * robots);

  if (robots > limits.max_robots)
    throw std::invalid_argument("oracle: instance has " + std::to_string(robots) +
                                " robots, limit is " + std::to_string(limits.max_robots));
  if (nodes > limits.max_nodes)
    throw std::invalid_argument("oracle: instance has " + std::to_string(nodes) +
                                " nodes, limit is " + std::to_string(limits.max_nodes));
  if (horizon > limits.max_horizon)
    throw std::invalid_argument("oracle: horizon " + std::to_string(horizon) + " exceeds limit " +
                                std::to_string(limits.max_horizon));

  std::vector<std::vector<Move>> moves(nodes);
  for (NodeId x = 0; x < nodes; ++x) moves[x].push_back({x, 0.0, nullptr});
  for (const Edge& e : g.edges) {
    const RiskySpec* r = g.find_risky(e.u, e.v);
    moves[e.u].push_back({e.v, e.cost, r});
    moves[e.v].push_back({e.u, e.cost, r});
  }
  for (auto& m : moves)
    std::sort(m.begin(), m.end(), [](const Move& a, const Move& b) { return a.to < b.to; });

  auto encode = [&](const std::vector<NodeId>& pos) {
    int key = 0;
    for (int r = robots - 1; r >= 0; --r) key = key * nodes + pos[r];
    return key;
  };
  auto decode = [&](int key) {
    std::vector<NodeId> pos(robots);
    for (int r = 0; r < robots; ++r) {
      pos[r] = key % nodes;
      key /= nodes;
    }
    return pos;
  };

  const int start_key = encode(inst.starts);
  const int goal_key = encode(inst.goals);

  SearchStats stats;
  Solution sol;

  std::vector<std::unordered_map<int, Reached>> layer(horizon + 1);
  layer[0][start_key] = Reached{0.0, -1, {}};

  double best_cost = kInf;
  int best_step = -1;

  std::vector<NodeId> pos, next(robots);
  std::vector<int> choice(robots);
  std::vector<Pairing> pairings, best_pairings;

  for (int t = 0; t < horizon; ++t) {
    for (const auto& [key, reached] : layer[t]) {
      if (key == goal_key) continue;  // staying finished costs nothing more
      if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >=
          limits.deadline_seconds) {
        stats.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        stats.timed_out = true;
        sol.stats = stats;
        return sol;
      }
      ++stats.visited_joint_states;
      pos = decode(key);

      // Odometer over every robot's move choice.
      std::fill(choice.begin(), choice.end(), 0);
      while (true) {
        bool someone_moves = false;
        double base = 0.0;
        for (int r = 0; r < robots; ++r) {
          const Move& m = moves[pos[r]][choice[r]];
          next[r] = m.to;
          base += m.cost;
          if (m.to != pos[r]) someone_moves = true;
        }
        if (someone_moves) {
          // Receivers: robots crossing a risky edge this step. Recursively
          // assign each one either no supporter or a distinct staying robot
          // parked on one of the edge's support nodes.
          std::vector<int> receivers;
          for (int r = 0; r < robots; ++r)
            if (next[r] != pos[r] && moves[pos[r]][choice[r]].risky != nullptr)
              receivers.push_back(r);

          double best_delta = 0.0;
          best_pairings.clear();
          pairings.clear();
          std::vector<bool> used(robots, false);
          auto assign = [&](auto&& self, std::size_t idx, double delta) -> void {
            if (idx == receivers.size()) {
              if (delta < best_delta) {
                best_delta = delta;
                best_pairings = pairings;
              }
              return;
            }
            self(self, idx + 1, delta);  // receiver goes unsupported
            int recv = receivers[idx];
            const RiskySpec* risky = moves[pos[recv]][choice[recv]].risky;
            const Edge* edge = g.find_edge(risky->u, risky->v);
            for (int m = 0; m < robots; ++m) {
              if (m == recv || used[m] || next[m] != pos[m]) continue;
              bool on_support =
                  std::find(risky->supports.begin(), risky->supports.end(), pos[m]) !=
                  risky->supports.end();
              if (!on_support) continue;
              used[m] = true;
              pairings.push_back({recv, m, risky});
              self(self, idx + 1,
                   delta - edge->cost + risky->reduced_cost + g.coord_cost);
              pairings.pop_back();
              used[m] = false;
            }
          };
          assign(assign, 0, 0.0);

          ++stats.expanded_joint_edges;
          const double step_cost = base + best_delta;
          const double total = reached.cost + step_cost;
          const int nkey = encode(next);
          auto [it, fresh] = layer[t + 1].try_emplace(nkey);
          if (fresh || total < it->second.cost) {
            it->second.cost = total;
            it->second.prev_positions = key;
            it->second.pairings = best_pairings;
          }
        }
        // Advance the odometer.
        int r = 0;
        while (r < robots) {
          if (++choice[r] < static_cast<int>(moves[pos[r]].size())) break;
          choice[r] = 0;
          ++r;
        }
        if (r == robots) break;
      }
    }
    auto done = layer[t + 1].find(goal_key);
    if (done != layer[t + 1].end() && done->second.cost < best_cost) {
      best_cost = done->second.cost;
      best_step = t + 1;
    }
  }
  if (start_key == goal_key) {
    best_cost = 0.0;
    best_step = 0;
  }

  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  sol.stats = stats;
  if (best_step < 0) return sol;  // no schedule within the horizon

  // Walk parents backwards to recover positions and coordinations per step.
  std::vector<int> keys(best_step + 1);
  keys[best_step] = goal_key;
  for (int t = best_step; t > 0; --t) keys[t - 1] = layer[t].at(keys[t]).prev_positions;

  sol.paths.assign(robots, {});
  sol.robot_costs.assign(robots, 0.0);
  for (int r = 0; r < robots; ++r)
    sol.paths[r].push_back({inst.starts[r], 0.0});

  for (int t = 1; t <= best_step; ++t) {
    const Reached& step = layer[t].at(keys[t]);
    std::vector<NodeId> from = decode(keys[t - 1]);
    std::vector<NodeId> to = decode(keys[t]);
    std::vector<const RiskySpec*> supported(robots, nullptr);
    std::vector<Pairing> step_pairs = step.pairings;
    std::sort(step_pairs.begin(), step_pairs.end(),
              [](const Pairing& a, const Pairing& b) { return a.receiver < b.receiver; });
    for (const Pairing& p : step_pairs) {
      supported[p.receiver] = p.risky;
      CoordinationEvent ev;
      ev.time_order = static_cast<int>(sol.events.size());
      ev.receiver = p.receiver;
      ev.supporter = p.supporter;
      ev.edge_from = from[p.receiver];
      ev.edge_to = to[p.receiver];
      ev.support_node = from[p.supporter];
      sol.events.push_back(ev);
    }
    for (int r = 0; r < robots; ++r) {
      double hop = 0.0;
      if (to[r] != from[r]) {
        if (supported[r] != nullptr)
          hop = g.supported_cost(*supported[r]);
        else
          hop = g.find_edge(from[r], to[r])->cost;
      }
      sol.robot_costs[r] += hop;
      sol.paths[r].push_back({to[r], sol.robot_costs[r]});
    }
  }

  double total = 0.0;
  for (double c : sol.robot_costs) total += c;
  sol.total_cost = total;
  return sol;
}

}  // namespace tcgre
