#include "tcgre/hjsg.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "tcgre/trace.hpp"

namespace tcgre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

NodeId other_end(const SuperEdge& e, NodeId from) { return e.u == from ? e.v : e.u; }

// Merge key of a joint state: one slot per robot, retired slots pinned to -1,
// and slots of robots sharing a goal sorted so permutations of
// interchangeable robots collide.
struct Canonicalizer {
  std::vector<std::vector<int>> groups;  // goal groups with >= 2 members
  int robots;

  explicit Canonicalizer(const std::vector<NodeId>& goals)
      : robots(static_cast<int>(goals.size())) {
    std::map<NodeId, std::vector<int>> by_goal;
    for (int r = 0; r < robots; ++r) by_goal[goals[r]].push_back(r);
    for (auto& [goal, members] : by_goal) {
      (void)goal;
      if (members.size() >= 2) groups.push_back(members);
    }
  }

  void key_of(const std::vector<NodeId>& pos, std::uint32_t mask,
              std::vector<std::int32_t>& key) const {
    key.resize(robots);
    for (int r = 0; r < robots; ++r) key[r] = (mask >> r & 1u) ? -1 : pos[r];
    for (const auto& members : groups) {
      // Sort the group's slots in place; groups are tiny.
      for (std::size_t i = 1; i < members.size(); ++i)
        for (std::size_t j = i; j > 0 && key[members[j - 1]] > key[members[j]]; --j)
          std::swap(key[members[j - 1]], key[members[j]]);
    }
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::int32_t>& key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int32_t x : key) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Transition {
  double cost = 0.0;
  int receiver = -1;
  int supporter = -1;
  int edge = -1;
  NodeId support_node = -1;
  int retired = -1;  // explicit retirement transitions only
};

// Single source of truth for the successor relation; both the public
// neighbor enumeration and the search itself go through here. `emit` is
// called with a scratch position vector that is only valid during the call.
// The search turns off `retirements` and `pair_moves` (see the header note on
// why that cannot change the optimum); the public enumeration keeps both.
template <typename F>
void for_each_successor(const SimplifiedGraph& sg, const std::vector<NodeId>& goals,
                        const std::vector<NodeId>& pos, std::uint32_t mask, bool auto_retire,
                        bool retirements, bool pair_moves, F&& emit) {
  const int robots = static_cast<int>(pos.size());
  std::vector<int> active;
  for (int r = 0; r < robots; ++r)
    if (!(mask >> r & 1u)) active.push_back(r);

  std::vector<NodeId> to = pos;
  auto finished = [&](std::uint32_t m) {
    if (!auto_retire) return m;
    for (int r : active)
      if (!(m >> r & 1u) && to[r] == goals[r]) m |= 1u << r;
    return m;
  };

  if (!auto_retire && retirements) {
    for (int r : active) {
      if (pos[r] != goals[r]) continue;
      Transition tr;
      tr.retired = r;
      emit(to, mask | (1u << r), tr);
    }
  }

  for (int r : active) {
    for (int e : sg.edges_at(pos[r])) {
      const SuperEdge& se = sg.super_edges[e];
      to[r] = other_end(se, pos[r]);
      Transition tr;
      tr.cost = se.base_cost;
      emit(to, finished(mask), tr);
      to[r] = pos[r];
    }
  }

  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      const int a = active[i], b = active[j];
      // Supported crossing: one of the pair crosses a risky super edge, the
      // other keeps standing on one of that edge's support nodes.
      for (auto [recv, supp] : {std::pair{a, b}, std::pair{b, a}}) {
        for (int e : sg.edges_at(pos[recv])) {
          const SuperEdge& se = sg.super_edges[e];
          if (!se.risky) continue;
          if (!std::binary_search(se.supports.begin(), se.supports.end(), pos[supp])) continue;
          to[recv] = other_end(se, pos[recv]);
          Transition tr;
          tr.cost = se.supported_cost;
          tr.receiver = recv;
          tr.supporter = supp;
          tr.edge = e;
          tr.support_node = pos[supp];
          emit(to, finished(mask), tr);
          to[recv] = pos[recv];
        }
      }
      // Independent pair move.
      if (!pair_moves) continue;
      for (int e1 : sg.edges_at(pos[a])) {
        const SuperEdge& se1 = sg.super_edges[e1];
        to[a] = other_end(se1, pos[a]);
        for (int e2 : sg.edges_at(pos[b])) {
          const SuperEdge& se2 = sg.super_edges[e2];
          to[b] = other_end(se2, pos[b]);
          Transition tr;
          tr.cost = se1.base_cost + se2.base_cost;
          emit(to, finished(mask), tr);
          to[b] = pos[b];
        }
        to[a] = pos[a];
      }
    }
  }
}

// Per-robot lower bounds on the cost of still reaching the goal: shortest
// paths over super edges priced at the cheapest rate any robot could ever pay
// (the supported rate where cheaper). Never overestimates — receivers pay at
// least that rate, plain movers pay base cost, supporters pay nothing while
// standing still — and obeys the triangle inequality along every transition,
// so ordering the search by dist + bound returns the exact same optimum.
struct GoalBounds {
  std::vector<int> dense_of;               // original node id -> super node index
  std::vector<std::vector<double>> table;  // one distance table per distinct goal
  std::vector<const std::vector<double>*> per_robot;

  GoalBounds(const SimplifiedGraph& sg, const std::vector<NodeId>& goals) {
    const int n = static_cast<int>(sg.super_nodes.size());
    dense_of.assign(sg.original_node_count, -1);
    for (int i = 0; i < n; ++i) dense_of[sg.super_nodes[i]] = i;

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const SuperEdge& e : sg.super_edges) {
      const double w = e.risky ? std::min(e.base_cost, e.supported_cost) : e.base_cost;
      adj[dense_of[e.u]].push_back({dense_of[e.v], w});
      adj[dense_of[e.v]].push_back({dense_of[e.u], w});
    }

    std::map<NodeId, int> slot_of;
    for (NodeId g : goals) {
      if (slot_of.count(g)) continue;
      slot_of[g] = static_cast<int>(table.size());
      std::vector<double> dist(n, kInf);
      using Qi = std::pair<double, int>;
      std::priority_queue<Qi, std::vector<Qi>, std::greater<Qi>> q;
      dist[dense_of[g]] = 0.0;
      q.emplace(0.0, dense_of[g]);
      while (!q.empty()) {
        auto [d, x] = q.top();
        q.pop();
        if (d > dist[x]) continue;
        for (auto [y, w] : adj[x])
          if (d + w < dist[y]) {
            dist[y] = d + w;
            q.emplace(d + w, y);
          }
      }
      table.push_back(std::move(dist));
    }
    for (NodeId g : goals) per_robot.push_back(&table[slot_of[g]]);
  }

  double at(int robot, NodeId node) const { return (*per_robot[robot])[dense_of[node]]; }
};

}  // namespace

std::vector<JointSuccessor> neighbors_2agent(const SimplifiedGraph& sg,
                                             const std::vector<NodeId>& goals,
                                             const ActiveJointState& s,
                                             const HjsgOptions& options) {
  const int robots = static_cast<int>(goals.size());
  std::vector<NodeId> pos(robots);
  std::uint32_t mask = 0;
  for (int r = 0; r < robots; ++r) pos[r] = goals[r];  // retired robots rest on goals
  for (const auto& [r, node] : s.active) {
    if (r < 0 || r >= robots) throw std::invalid_argument("neighbors: robot id out of range");
    pos[r] = node;
  }
  for (const auto& [r, cost] : s.retired_costs) {
    (void)cost;
    if (r < 0 || r >= robots) throw std::invalid_argument("neighbors: robot id out of range");
    mask |= 1u << r;
  }

  Canonicalizer canon(goals);
  std::vector<std::int32_t> key;
  std::unordered_map<std::vector<std::int32_t>, std::size_t, KeyHash> seen;
  std::vector<JointSuccessor> out;

  for_each_successor(sg, goals, pos, mask, options.auto_retire,
                     /*retirements=*/true, /*pair_moves=*/true,
                     [&](const std::vector<NodeId>& to, std::uint32_t new_mask,
                         const Transition& tr) {
                       canon.key_of(to, new_mask, key);
                       auto it = seen.find(key);
                       if (it != seen.end() && out[it->second].cost <= tr.cost) return;

                       JointSuccessor succ;
                       succ.cost = tr.cost;
                       for (int r = 0; r < robots; ++r)
                         if (!(new_mask >> r & 1u)) succ.state.active[r] = to[r];
                       succ.state.retired_costs = s.retired_costs;
                       for (int r = 0; r < robots; ++r)
                         if ((new_mask >> r & 1u) && !(mask >> r & 1u))
                           succ.state.retired_costs[r] = 0.0;
                       if (tr.receiver >= 0) {
                         JointTransition::Coordination c;
                         c.receiver = tr.receiver;
                         c.supporter = tr.supporter;
                         c.edge = tr.edge;
                         c.support_node = tr.support_node;
                         succ.coordination = c;
                       }
                       if (tr.retired >= 0) succ.retired_robot = tr.retired;

                       if (it != seen.end()) {
                         out[it->second] = std::move(succ);
                       } else {
                         seen.emplace(key, out.size());
                         out.push_back(std::move(succ));
                       }
                     });
  return out;
}

Solution dynamic_hjsg_search(const SimplifiedGraph& sg, const ProblemInstance& inst,
                             const HjsgOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const int robots = inst.robot_count();
  if (robots > 32) throw std::invalid_argument("hjsg: more than 32 robots are not supported");

  SearchStats stats;
  Solution none;

  GoalBounds bounds(sg, inst.goals);

  struct Rec {
    std::uint64_t pos = 0;  // packed robot-indexed positions (packed mode only)
    double dist = kInf;
    std::int64_t prev = -1;
    std::uint32_t mask = 0;
    std::int32_t edge = -1;  // coordination carried by the transition into this state
    std::int16_t receiver = -1;
    std::int16_t supporter = -1;
    NodeId support_node = -1;
    std::uint8_t off_goal = 0;  // active robots not standing on their goal
    bool visited = false;
  };

  // Canonical keys (and robot-indexed positions) pack into one word when
  // the per-robot slots fit; value node_count encodes a retired slot.
  const int node_count = inst.graph.node_count;
  int bits = 1;
  while ((1ll << bits) <= node_count) ++bits;
  const bool packed = bits * robots <= 64;

  std::vector<Rec> recs;
  std::vector<std::vector<NodeId>> pos_store;  // fallback mode only
  std::unordered_map<std::uint64_t, std::int64_t> packed_registry;
  std::unordered_map<std::vector<std::int32_t>, std::int64_t, KeyHash> vector_registry;
  if (packed) packed_registry.reserve(1 << 10);

  Canonicalizer canon(inst.goals);
  std::vector<std::int32_t> key;

  auto pack_slots = [&](auto const& slots) {
    std::uint64_t out = 0;
    for (int r = 0; r < robots; ++r) {
      const std::uint64_t v = slots[r] < 0 ? static_cast<std::uint64_t>(node_count)
                                           : static_cast<std::uint64_t>(slots[r]);
      out |= v << (r * bits);
    }
    return out;
  };
  auto store_pos = [&](std::int64_t id, const std::vector<NodeId>& p) {
    if (packed) {
      recs[id].pos = pack_slots(p);
    } else {
      if (pos_store.size() < recs.size()) pos_store.resize(recs.size());
      pos_store[id] = p;
    }
  };
  auto load_pos = [&](std::int64_t id, std::vector<NodeId>& p) {
    if (packed) {
      const std::uint64_t mask_bits = (1ull << bits) - 1;
      p.resize(robots);
      for (int r = 0; r < robots; ++r)
        p[r] = static_cast<NodeId>(recs[id].pos >> (r * bits) & mask_bits);
    } else {
      p = pos_store[id];
    }
  };
  auto find_or_create = [&](const std::vector<std::int32_t>& k) {
    const auto next = static_cast<std::int64_t>(recs.size());
    const auto [id, fresh] = packed
                                 ? [&] {
                                     auto [it, f] = packed_registry.try_emplace(pack_slots(k), next);
                                     return std::pair{it->second, f};
                                   }()
                                 : [&] {
                                     auto [it, f] = vector_registry.try_emplace(k, next);
                                     return std::pair{it->second, f};
                                   }();
    if (fresh) recs.emplace_back();
    return id;
  };

  // Remaining-cost bound plus "robots still to place" used as the tie-break.
  auto h_and_off = [&](const std::vector<NodeId>& p, std::uint32_t mask) {
    double h = 0.0;
    int off = 0;
    for (int r = 0; r < robots; ++r) {
      if (mask >> r & 1u) continue;
      h += bounds.at(r, p[r]);
      if (p[r] != inst.goals[r]) ++off;
    }
    return std::pair<double, std::uint8_t>{h, static_cast<std::uint8_t>(off)};
  };

  std::vector<NodeId> start_pos = inst.starts;
  std::uint32_t start_mask = 0;
  if (options.auto_retire) {
    for (int r = 0; r < robots; ++r)
      if (inst.starts[r] == inst.goals[r]) start_mask |= 1u << r;
  }
  const auto [h0, off0] = h_and_off(start_pos, start_mask);
  canon.key_of(start_pos, start_mask, key);
  const std::int64_t start_id = find_or_create(key);
  recs[start_id].dist = 0.0;
  recs[start_id].mask = start_mask;
  recs[start_id].off_goal = off0;
  store_pos(start_id, start_pos);

  // (dist + bound, robots off goal, id): the tie-break pops more finished
  // states first so the terminal state surfaces as soon as it is optimal.
  using Item = std::tuple<double, std::uint8_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  if (std::isfinite(h0)) pq.emplace(h0, off0, start_id);

  std::int64_t solved_id = -1;
  std::vector<NodeId> pos;
  std::uint64_t tick = 0;
  while (!pq.empty()) {
    if ((tick++ & 1023u) == 0 && elapsed_since(t0) >= options.deadline_seconds) {
      stats.wall_time_seconds = elapsed_since(t0);
      stats.timed_out = true;
      none.stats = stats;
      return none;
    }
    const auto [f, off, cur] = pq.top();
    pq.pop();
    (void)f;
    (void)off;
    if (recs[cur].visited) continue;
    recs[cur].visited = true;
    ++stats.visited_joint_states;
    if (recs[cur].off_goal == 0) {
      solved_id = cur;
      break;
    }

    load_pos(cur, pos);
    const std::uint32_t mask = recs[cur].mask;
    const double base_dist = recs[cur].dist;

    for_each_successor(
        sg, inst.goals, pos, mask, options.auto_retire,
        /*retirements=*/false, options.pair_moves,
        [&](const std::vector<NodeId>& to, std::uint32_t new_mask, const Transition& tr) {
          ++stats.expanded_joint_edges;
          const double nd = base_dist + tr.cost;
          canon.key_of(to, new_mask, key);
          const std::int64_t id = find_or_create(key);
          Rec& rec = recs[id];
          if (rec.visited || nd >= rec.dist) return;
          const auto [h, off_new] = h_and_off(to, new_mask);
          if (!std::isfinite(h)) return;  // some robot can no longer reach its goal
          rec.dist = nd;
          rec.prev = cur;
          rec.mask = new_mask;
          rec.edge = tr.edge;
          rec.receiver = static_cast<std::int16_t>(tr.receiver);
          rec.supporter = static_cast<std::int16_t>(tr.supporter);
          rec.support_node = tr.support_node;
          rec.off_goal = off_new;
          store_pos(id, to);
          pq.emplace(nd + h, off_new, id);
        });
  }

  stats.wall_time_seconds = elapsed_since(t0);
  if (solved_id < 0) {
    none.stats = stats;
    return none;  // some goal is unreachable in the simplified graph
  }

  std::vector<TraceStep> steps;
  std::vector<NodeId> at;
  std::vector<NodeId> parent_at;
  for (std::int64_t id = solved_id; recs[id].prev >= 0; id = recs[id].prev) {
    const Rec& rec = recs[id];
    load_pos(id, at);
    load_pos(rec.prev, parent_at);
    TraceStep step;
    for (int r = 0; r < robots; ++r)
      if (at[r] != parent_at[r]) step.hops.push_back({r, parent_at[r], at[r]});
    if (rec.receiver >= 0) {
      JointTransition::Coordination c;
      c.receiver = rec.receiver;
      c.supporter = rec.supporter;
      c.edge = rec.edge;
      c.support_node = rec.support_node;
      step.coordinations.push_back(c);
    }
    steps.push_back(std::move(step));
  }
  std::reverse(steps.begin(), steps.end());
  return reconstruct_paths(sg, inst, steps, stats);
}

}  // namespace tcgre
