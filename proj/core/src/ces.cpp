#include "tcgre/ces.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "shortest_paths.hpp"

namespace tcgre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Metric = std::function<double(NodeId, NodeId)>;

struct PlanItem {
  int pair = -1;  // index into the support pair list
  int receiver = 0;
  int supporter = 0;
};

// Routing duties of one robot under a plan, in plan order.
struct Duty {
  bool receives = false;  // else: supports
  int pair = -1;
};

// One DP state while routing a robot through its duties.
struct RouteState {
  NodeId pos = -1;
  double cost = kInf;
  int parent = -1;        // state index in the previous level
  bool crossed_u_to_v = false;  // receivers: direction of the crossing
};

struct Engine {
  const SimplifiedGraph& sg;
  const ProblemInstance& inst;
  const CesOptions& opts;
  Metric metric;
  std::chrono::steady_clock::time_point t0;

  std::vector<SupportPair> pairs;
  std::vector<int> pair_edge;  // super edge index per pair
  int cap = 0;
  double delta_max = 0.0;  // largest possible saving by adding one event

  SearchStats stats;
  bool timed_out = false;
  double best_cost = kInf;
  std::vector<PlanItem> best_plan;
  std::vector<PlanItem> cur;
  std::vector<char> used;

  Engine(const SimplifiedGraph& sg_, const ProblemInstance& inst_, const CesOptions& opts_,
         Metric metric_)
      : sg(sg_), inst(inst_), opts(opts_), metric(std::move(metric_)),
        t0(std::chrono::steady_clock::now()) {
    pairs = enumerate_support_pairs(sg);
    for (const SupportPair& p : pairs) pair_edge.push_back(sg.edge_index(p.edge_u, p.edge_v));
    cap = static_cast<int>(pairs.size());
    if (opts.max_events >= 0) cap = std::min(cap, opts.max_events);
    used.assign(pairs.size(), 0);
    for (int e : pair_edge) {
      const SuperEdge& se = sg.super_edges[e];
      delta_max = std::max(delta_max, query(se.u, se.v) - se.supported_cost);
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  double query(NodeId a, NodeId b) {
    ++stats.expanded_joint_edges;
    return metric(a, b);
  }

  // Cheapest total cost of a plan; optionally keeps the per-robot DP levels
  // for path realization.
  double evaluate(const std::vector<PlanItem>& plan,
                  std::vector<std::vector<std::vector<RouteState>>>* levels_out = nullptr) {
    ++stats.visited_joint_states;
    const int robots = inst.robot_count();
    double total = 0.0;
    if (levels_out) levels_out->assign(robots, {});
    for (int r = 0; r < robots; ++r) {
      std::vector<Duty> duties;
      for (const PlanItem& item : plan) {
        if (item.receiver == r) duties.push_back({true, item.pair});
        if (item.supporter == r) duties.push_back({false, item.pair});
      }
      std::vector<std::vector<RouteState>> levels;
      levels.push_back({{inst.starts[r], 0.0, -1, false}});
      for (const Duty& duty : duties) {
        const SupportPair& p = pairs[duty.pair];
        const SuperEdge& se = sg.super_edges[pair_edge[duty.pair]];
        std::vector<RouteState> next;
        auto offer = [&next](NodeId pos, double cost, int parent, bool u_to_v) {
          for (RouteState& st : next) {
            if (st.pos != pos) continue;
            if (cost < st.cost) st = {pos, cost, parent, u_to_v};
            return;
          }
          next.push_back({pos, cost, parent, u_to_v});
        };
        const auto& prev = levels.back();
        for (int s = 0; s < static_cast<int>(prev.size()); ++s) {
          if (!std::isfinite(prev[s].cost)) continue;
          if (duty.receives) {
            offer(se.v, prev[s].cost + query(prev[s].pos, se.u) + se.supported_cost, s, true);
            offer(se.u, prev[s].cost + query(prev[s].pos, se.v) + se.supported_cost, s, false);
          } else {
            offer(p.support_node, prev[s].cost + query(prev[s].pos, p.support_node), s, false);
          }
        }
        levels.push_back(std::move(next));
      }
      double best = kInf;
      for (const RouteState& st : levels.back())
        if (std::isfinite(st.cost)) best = std::min(best, st.cost + query(st.pos, inst.goals[r]));
      if (levels_out) (*levels_out)[r] = std::move(levels);
      if (!std::isfinite(best)) return kInf;
      total += best;
    }
    return total;
  }

  void dfs() {
    if (timed_out) return;
    if (elapsed() >= opts.deadline_seconds) {
      timed_out = true;
      return;
    }
    const double cost = evaluate(cur);
    if (cost < best_cost) {
      best_cost = cost;
      best_plan = cur;
    }
    const int depth = static_cast<int>(cur.size());
    if (depth >= cap) return;
    if (!std::isfinite(cost)) return;  // waypoints never repair disconnection
    const int remaining = cap - depth;
    if (std::isfinite(best_cost) && cost - remaining * delta_max >= best_cost - kCostTolerance)
      return;  // extensions cannot beat the incumbent

    const int robots = inst.robot_count();
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
      if (used[p]) continue;
      used[p] = 1;
      for (int recv = 0; recv < robots; ++recv) {
        for (int supp = 0; supp < robots; ++supp) {
          if (supp == recv) continue;
          cur.push_back({p, recv, supp});
          dfs();
          cur.pop_back();
          if (timed_out) {
            used[p] = 0;
            return;
          }
        }
      }
      used[p] = 0;
    }
  }

  Solution run() {
    Solution sol;
    // With a single robot no (receiver, supporter) assignment exists, so the
    // recursion naturally evaluates only the empty plan.
    dfs();
    stats.wall_time_seconds = elapsed();
    stats.timed_out = timed_out;
    sol.stats = stats;
    if (timed_out || !std::isfinite(best_cost)) return sol;

    // Realize the winning plan into paths on the original graph.
    std::vector<std::vector<std::vector<RouteState>>> levels;
    evaluate(best_plan, &levels);
    --stats.visited_joint_states;  // bookkeeping re-evaluation, not a new plan
    sol.stats = stats;

    detail::Adjacency adj(inst.graph);
    const int robots = inst.robot_count();
    sol.paths.assign(robots, {});
    sol.robot_costs.assign(robots, 0.0);
    std::vector<bool> direction_u_to_v(best_plan.size(), true);

    for (int r = 0; r < robots; ++r) {
      std::vector<Duty> duties;
      for (const PlanItem& item : best_plan) {
        if (item.receiver == r) duties.push_back({true, item.pair});
        if (item.supporter == r) duties.push_back({false, item.pair});
      }
      // Pick the cheapest final state, then walk parents to recover the
      // chosen positions and crossing directions.
      const auto& robot_levels = levels[r];
      int pick = -1;
      double best = kInf;
      for (int s = 0; s < static_cast<int>(robot_levels.back().size()); ++s) {
        const RouteState& st = robot_levels.back()[s];
        if (!std::isfinite(st.cost)) continue;
        double c = st.cost + metric(st.pos, inst.goals[r]);
        if (c < best) {
          best = c;
          pick = s;
        }
      }
      std::vector<const RouteState*> chain(robot_levels.size());
      for (int lvl = static_cast<int>(robot_levels.size()) - 1; lvl >= 0; --lvl) {
        chain[lvl] = &robot_levels[lvl][pick];
        pick = robot_levels[lvl][pick].parent;
      }

      auto& path = sol.paths[r];
      double& cost = sol.robot_costs[r];
      path.push_back({inst.starts[r], 0.0});
      auto walk_to = [&](NodeId target) {
        std::vector<NodeId> seg = detail::lex_shortest_path(adj, path.back().node, target);
        if (seg.empty()) throw std::logic_error("ces: realization segment unreachable");
        for (std::size_t i = 1; i < seg.size(); ++i) {
          cost += inst.graph.find_edge(seg[i - 1], seg[i])->cost;
          path.push_back({seg[i], cost});
        }
      };
      std::size_t duty_idx = 0;
      for (const Duty& duty : duties) {
        const RouteState& st = *chain[duty_idx + 1];
        const SuperEdge& se = sg.super_edges[pair_edge[duty.pair]];
        if (duty.receives) {
          NodeId entry = st.crossed_u_to_v ? se.u : se.v;
          NodeId exit = st.crossed_u_to_v ? se.v : se.u;
          walk_to(entry);
          cost += se.supported_cost;
          path.push_back({exit, cost});
          // Remember the direction for the event list.
          for (std::size_t s = 0; s < best_plan.size(); ++s)
            if (best_plan[s].pair == duty.pair) direction_u_to_v[s] = st.crossed_u_to_v;
        } else {
          walk_to(pairs[duty.pair].support_node);
        }
        ++duty_idx;
      }
      walk_to(inst.goals[r]);
    }

    for (std::size_t s = 0; s < best_plan.size(); ++s) {
      const PlanItem& item = best_plan[s];
      const SuperEdge& se = sg.super_edges[pair_edge[item.pair]];
      CoordinationEvent ev;
      ev.time_order = static_cast<int>(s);
      ev.receiver = item.receiver;
      ev.supporter = item.supporter;
      ev.edge_from = direction_u_to_v[s] ? se.u : se.v;
      ev.edge_to = direction_u_to_v[s] ? se.v : se.u;
      ev.support_node = pairs[item.pair].support_node;
      sol.events.push_back(ev);
    }

    double total = 0.0;
    for (double c : sol.robot_costs) total += c;
    sol.total_cost = total;
    return sol;
  }
};

}  // namespace

Solution ces_solve(const SimplifiedGraph& sg, const ProblemInstance& inst,
                   const CesOptions& options) {
  detail::Adjacency adj(inst.graph);
  // Deliberately answers every query with a fresh single-source run.
  Metric metric = [adj = std::move(adj)](NodeId a, NodeId b) {
    return detail::dijkstra(adj, a)[b];
  };
  Engine engine(sg, inst, options, std::move(metric));
  return engine.run();
}

Solution hces_solve(const SimplifiedGraph& sg, const ProblemInstance& inst,
                    const CesOptions& options) {
  auto matrix = all_pairs_spc(inst.graph);
  Metric metric = [matrix = std::move(matrix)](NodeId a, NodeId b) { return matrix[a][b]; };
  Engine engine(sg, inst, options, std::move(metric));
  return engine.run();
}

}  // namespace tcgre
