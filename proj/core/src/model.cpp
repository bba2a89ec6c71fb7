#include "tcgre/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace tcgre {
namespace {

std::string fmt(const char* pattern, ...) {
  va_list args;
  va_start(args, pattern);
  char buf[512];
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return std::string(buf);
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

const Edge* EnvironmentGraph::find_edge(NodeId a, NodeId b) const {
  for (const Edge& e : edges) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return &e;
  }
  return nullptr;
}

const RiskySpec* EnvironmentGraph::find_risky(NodeId a, NodeId b) const {
  for (const RiskySpec& r : risky) {
    if ((r.u == a && r.v == b) || (r.u == b && r.v == a)) return &r;
  }
  return nullptr;
}

ValidationReport validate_instance(const ProblemInstance& inst) {
  ValidationReport report;
  auto flag = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

  const EnvironmentGraph& g = inst.graph;
  if (g.node_count <= 0) flag("graph must have at least one node");
  auto node_ok = [&g](NodeId n) { return n >= 0 && n < g.node_count; };

  std::set<std::uint64_t> seen_edges;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (!node_ok(e.u) || !node_ok(e.v)) {
      flag(fmt("edge %zu: endpoint out of range (%d,%d)", i, e.u, e.v));
      continue;
    }
    if (e.u == e.v) flag(fmt("edge %zu: self loop at node %d", i, e.u));
    if (!finite_nonneg(e.cost)) flag(fmt("edge %zu: cost must be finite and nonnegative", i));
    if (!seen_edges.insert(pair_key(e.u, e.v)).second)
      flag(fmt("edge %zu: duplicate edge (%d,%d)", i, e.u, e.v));
  }

  if (!finite_nonneg(g.coord_cost)) flag("coordination cost must be finite and nonnegative");

  std::set<std::uint64_t> seen_risky;
  for (std::size_t i = 0; i < g.risky.size(); ++i) {
    const RiskySpec& r = g.risky[i];
    if (!node_ok(r.u) || !node_ok(r.v)) {
      flag(fmt("risky entry %zu: endpoint out of range (%d,%d)", i, r.u, r.v));
      continue;
    }
    const Edge* e = g.find_edge(r.u, r.v);
    if (e == nullptr) {
      flag(fmt("risky entry %zu: (%d,%d) is not an edge of the graph", i, r.u, r.v));
      continue;
    }
    if (!seen_risky.insert(pair_key(r.u, r.v)).second)
      flag(fmt("risky entry %zu: duplicate risky edge (%d,%d)", i, r.u, r.v));
    if (!finite_nonneg(r.reduced_cost))
      flag(fmt("risky entry %zu: reduced cost must be finite and nonnegative", i));
    else if (r.reduced_cost > e->cost)
      flag(fmt("risky entry %zu: reduced cost %g exceeds base cost %g", i, r.reduced_cost, e->cost));
    if (r.supports.empty())
      flag(fmt("risky entry %zu: support node list is empty", i));
    std::set<NodeId> seen_supports;
    for (NodeId k : r.supports) {
      if (!node_ok(k))
        flag(fmt("risky entry %zu: support node %d out of range", i, k));
      else if (!seen_supports.insert(k).second)
        flag(fmt("risky entry %zu: duplicate support node %d", i, k));
    }
  }

  if (inst.starts.size() != inst.goals.size())
    flag("starts and goals must have the same length");
  if (inst.starts.empty()) flag("at least one robot is required");
  for (std::size_t n = 0; n < inst.starts.size(); ++n)
    if (!node_ok(inst.starts[n])) flag(fmt("robot %zu: start node out of range", n));
  for (std::size_t n = 0; n < inst.goals.size(); ++n)
    if (!node_ok(inst.goals[n])) flag(fmt("robot %zu: goal node out of range", n));

  if (inst.horizon.has_value() && *inst.horizon < 1)
    flag("horizon must be positive when present");

  return report;
}

ValidationReport check_solution(const ProblemInstance& inst, const Solution& sol) {
  ValidationReport report;
  auto flag = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

  const EnvironmentGraph& g = inst.graph;
  const int robots = inst.robot_count();

  if (!sol.total_cost.has_value()) {
    // A solver that found nothing must not claim a schedule.
    if (!sol.paths.empty()) flag("no total cost but paths are present");
    if (!sol.events.empty()) flag("no total cost but events are present");
    if (!sol.robot_costs.empty()) flag("no total cost but per-robot costs are present");
    return report;
  }

  if (static_cast<int>(sol.paths.size()) != robots) {
    flag(fmt("expected %d paths, got %zu", robots, sol.paths.size()));
    return report;
  }
  if (static_cast<int>(sol.robot_costs.size()) != robots) {
    flag(fmt("expected %d per-robot costs, got %zu", robots, sol.robot_costs.size()));
    return report;
  }

  // Edge lookups keyed on the unordered endpoint pair.
  std::unordered_map<std::uint64_t, const Edge*> edge_of;
  std::unordered_map<std::uint64_t, const RiskySpec*> risky_of;
  for (const Edge& e : g.edges) edge_of[pair_key(e.u, e.v)] = &e;
  for (const RiskySpec& r : g.risky) risky_of[pair_key(r.u, r.v)] = &r;

  bool paths_usable = true;
  for (int n = 0; n < robots; ++n) {
    const auto& path = sol.paths[n];
    if (path.empty()) {
      flag(fmt("robot %d: path is empty", n));
      paths_usable = false;
      continue;
    }
    if (path.front().node != inst.starts[n])
      flag(fmt("robot %d: path starts at %d, not at start node %d", n, path.front().node,
               inst.starts[n]));
    if (path.back().node != inst.goals[n])
      flag(fmt("robot %d: path ends at %d, not at goal node %d", n, path.back().node,
               inst.goals[n]));
    if (std::abs(path.front().cost_to_date) > kCostTolerance)
      flag(fmt("robot %d: first entry cost is %g, expected 0", n, path.front().cost_to_date));
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i].node < 0 || path[i].node >= g.node_count) {
        flag(fmt("robot %d: path node %d out of range", n, path[i].node));
        paths_usable = false;
      }
      if (i > 0) {
        if (path[i].cost_to_date + kCostTolerance < path[i - 1].cost_to_date)
          flag(fmt("robot %d: entry cost decreases at index %zu", n, i));
        NodeId a = path[i - 1].node, b = path[i].node;
        if (a != b && edge_of.find(pair_key(a, b)) == edge_of.end()) {
          flag(fmt("robot %d: hop (%d,%d) is not an edge", n, a, b));
          paths_usable = false;
        }
      }
    }
  }

  // Structural event checks.
  std::vector<const CoordinationEvent*> ordered;
  ordered.reserve(sol.events.size());
  bool events_usable = true;
  for (std::size_t i = 0; i < sol.events.size(); ++i) {
    const CoordinationEvent& ev = sol.events[i];
    if (ev.receiver < 0 || ev.receiver >= robots || ev.supporter < 0 || ev.supporter >= robots) {
      flag(fmt("event %zu: robot id out of range", i));
      events_usable = false;
      continue;
    }
    if (ev.receiver == ev.supporter) {
      flag(fmt("event %zu: receiver and supporter are the same robot", i));
      events_usable = false;
      continue;
    }
    auto it = risky_of.find(pair_key(ev.edge_from, ev.edge_to));
    if (it == risky_of.end()) {
      flag(fmt("event %zu: (%d,%d) is not a risky edge", i, ev.edge_from, ev.edge_to));
      events_usable = false;
      continue;
    }
    const RiskySpec* r = it->second;
    if (std::find(r->supports.begin(), r->supports.end(), ev.support_node) == r->supports.end()) {
      flag(fmt("event %zu: node %d cannot support risky edge (%d,%d)", i, ev.support_node, r->u,
               r->v));
      events_usable = false;
      continue;
    }
    if (ev.time_order < 0 || ev.time_order >= static_cast<int>(sol.events.size())) {
      flag(fmt("event %zu: time order %d outside [0,%zu)", i, ev.time_order, sol.events.size()));
      events_usable = false;
      continue;
    }
    ordered.push_back(&ev);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const CoordinationEvent* a, const CoordinationEvent* b) {
                     if (a->time_order != b->time_order) return a->time_order < b->time_order;
                     return a->receiver < b->receiver;
                   });
  // Orders must start at 0 and never jump; equal orders mean simultaneous
  // events, in which case no robot may take part twice.
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    int prev = (i == 0) ? 0 : ordered[i - 1]->time_order;
    int cur = ordered[i]->time_order;
    if ((i == 0 && cur != 0) || (i > 0 && cur != prev && cur != prev + 1)) {
      flag("event time orders must be consecutive from 0");
      events_usable = false;
      break;
    }
  }
  if (events_usable) {
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
      for (std::size_t j = i + 1; j < ordered.size(); ++j) {
        if (ordered[j]->time_order != ordered[i]->time_order) break;
        std::set<int> involved = {ordered[i]->receiver, ordered[i]->supporter};
        if (involved.count(ordered[j]->receiver) || involved.count(ordered[j]->supporter)) {
          flag(fmt("time order %d: a robot takes part in two events", ordered[i]->time_order));
          events_usable = false;
        }
      }
    }
  }

  if (!paths_usable || !events_usable) return report;

  // Schedule consistency: walk the events in order and advance a pointer per
  // robot. A receiver must cross the event's edge at or after its pointer; a
  // supporter must be located on the support node at or after its pointer and
  // is free to stay there (its pointer does not move past the node).
  std::vector<std::size_t> ptr(robots, 0);
  std::vector<std::map<std::size_t, const RiskySpec*>> discounted(robots);
  for (const CoordinationEvent* ev : ordered) {
    const auto& rpath = sol.paths[ev->receiver];
    const RiskySpec* risky = risky_of.at(pair_key(ev->edge_from, ev->edge_to));
    bool hop_found = false;
    for (std::size_t h = ptr[ev->receiver]; h + 1 < rpath.size(); ++h) {
      NodeId a = rpath[h].node, b = rpath[h + 1].node;
      if (pair_key(a, b) == pair_key(ev->edge_from, ev->edge_to) && a != b) {
        discounted[ev->receiver].emplace(h, risky);
        ptr[ev->receiver] = h + 1;
        hop_found = true;
        break;
      }
    }
    if (!hop_found) {
      flag(fmt("event %d: robot %d never crosses (%d,%d) after its earlier commitments",
               ev->time_order, ev->receiver, ev->edge_from, ev->edge_to));
      continue;
    }
    const auto& spath = sol.paths[ev->supporter];
    bool support_found = false;
    for (std::size_t s = ptr[ev->supporter]; s < spath.size(); ++s) {
      if (spath[s].node == ev->support_node) {
        ptr[ev->supporter] = s;
        support_found = true;
        break;
      }
    }
    if (!support_found)
      flag(fmt("event %d: robot %d is never on support node %d after its earlier commitments",
               ev->time_order, ev->supporter, ev->support_node));
  }

  // Recompute all costs from scratch using the matched discounts.
  double recomputed_total = 0.0;
  for (int n = 0; n < robots; ++n) {
    const auto& path = sol.paths[n];
    double acc = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
      NodeId a = path[i - 1].node, b = path[i].node;
      if (a != b) {
        auto disc = discounted[n].find(i - 1);
        if (disc != discounted[n].end())
          acc += g.supported_cost(*disc->second);
        else
          acc += edge_of.at(pair_key(a, b))->cost;
      }
      if (std::abs(path[i].cost_to_date - acc) > kCostTolerance)
        flag(fmt("robot %d: entry %zu states cost %g, recomputed %g", n, i, path[i].cost_to_date,
                 acc));
    }
    if (std::abs(acc - sol.robot_costs[n]) > kCostTolerance)
      flag(fmt("robot %d: stated cost %g, recomputed %g", n, sol.robot_costs[n], acc));
    recomputed_total += sol.robot_costs[n];
  }
  if (*sol.total_cost != recomputed_total)
    flag(fmt("total cost %g is not the exact sum of per-robot costs %g", *sol.total_cost,
             recomputed_total));

  return report;
}

}  // namespace tcgre
