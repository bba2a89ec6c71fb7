#include "tcgre/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcgre {

Solution reconstruct_paths(const SimplifiedGraph& sg, const ProblemInstance& inst,
                           const std::vector<TraceStep>& steps, const SearchStats& stats) {
  const int robots = inst.robot_count();
  Solution sol;
  sol.stats = stats;
  sol.paths.assign(robots, {});
  sol.robot_costs.assign(robots, 0.0);
  for (int r = 0; r < robots; ++r) sol.paths[r].push_back({inst.starts[r], 0.0});

  for (const TraceStep& step : steps) {
    // Which robots receive support on this step, and across which edge.
    std::vector<int> receiver_edge(robots, -1);
    for (const auto& c : step.coordinations) receiver_edge[c.receiver] = c.edge;

    for (const TraceStep::Hop& hop : step.hops) {
      const int e = sg.edge_index(hop.from, hop.to);
      if (e < 0) throw std::logic_error("trace: hop is not a super edge");
      const SuperEdge& se = sg.super_edges[e];
      auto& path = sol.paths[hop.robot];
      double& cost = sol.robot_costs[hop.robot];
      if (receiver_edge[hop.robot] == e) {
        // Supported traversal stays on the risky edge itself.
        cost += se.supported_cost;
        path.push_back({hop.to, cost});
      } else {
        std::vector<NodeId> walk = se.witness;
        if (hop.from != walk.front()) std::reverse(walk.begin(), walk.end());
        for (std::size_t i = 1; i < walk.size(); ++i) {
          cost += inst.graph.find_edge(walk[i - 1], walk[i])->cost;
          path.push_back({walk[i], cost});
        }
      }
    }

    for (const auto& c : step.coordinations) {
      const TraceStep::Hop* hop = nullptr;
      for (const TraceStep::Hop& h : step.hops)
        if (h.robot == c.receiver) hop = &h;
      if (hop == nullptr) throw std::logic_error("trace: coordination without a receiver hop");
      CoordinationEvent ev;
      ev.time_order = static_cast<int>(sol.events.size());
      ev.receiver = c.receiver;
      ev.supporter = c.supporter;
      ev.edge_from = hop->from;
      ev.edge_to = hop->to;
      ev.support_node = c.support_node;
      sol.events.push_back(ev);
    }
  }

  double total = 0.0;
  for (double c : sol.robot_costs) total += c;
  sol.total_cost = total;
  return sol;
}

}  // namespace tcgre
