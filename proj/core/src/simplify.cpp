#include "tcgre/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "shortest_paths.hpp"

namespace tcgre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

const std::vector<int>& empty_index_list() {
  static const std::vector<int> empty;
  return empty;
}

}  // namespace

int SimplifiedGraph::edge_index(NodeId a, NodeId b) const {
  auto it = edge_by_pair_.find(pair_key(a, b));
  return it == edge_by_pair_.end() ? -1 : it->second;
}

const std::vector<int>& SimplifiedGraph::edges_at(NodeId x) const {
  auto it = incident_.find(x);
  return it == incident_.end() ? empty_index_list() : it->second;
}

const std::vector<int>& SimplifiedGraph::supporting_at(NodeId x) const {
  auto it = supporting_.find(x);
  return it == supporting_.end() ? empty_index_list() : it->second;
}

bool SimplifiedGraph::is_super_node(NodeId x) const {
  return std::binary_search(super_nodes.begin(), super_nodes.end(), x);
}

void SimplifiedGraph::rebuild_lookups() {
  edge_by_pair_.clear();
  incident_.clear();
  supporting_.clear();
  for (std::size_t i = 0; i < super_edges.size(); ++i) {
    const SuperEdge& e = super_edges[i];
    edge_by_pair_[pair_key(e.u, e.v)] = static_cast<int>(i);
    incident_[e.u].push_back(static_cast<int>(i));
    incident_[e.v].push_back(static_cast<int>(i));
    if (e.risky)
      for (NodeId k : e.supports) supporting_[k].push_back(static_cast<int>(i));
  }
}

std::vector<std::vector<double>> all_pairs_spc(const EnvironmentGraph& g) {
  const int n = g.node_count;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
  for (int i = 0; i < n; ++i) dist[i][i] = 0.0;
  for (const Edge& e : g.edges) {
    dist[e.u][e.v] = std::min(dist[e.u][e.v], e.cost);
    dist[e.v][e.u] = dist[e.u][e.v];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (dist[i][k] == kInf) continue;
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
    }
  return dist;
}

SimplifiedGraph build_simplified(const ProblemInstance& inst) {
  const EnvironmentGraph& g = inst.graph;
  const auto spc = all_pairs_spc(g);

  for (int n = 0; n < inst.robot_count(); ++n)
    if (!std::isfinite(spc[inst.starts[n]][inst.goals[n]]))
      throw std::runtime_error("simplify: goal of robot " + std::to_string(n) +
                               " is unreachable from its start");

  // Demotion: a risky edge stays risky only when supported traversal beats
  // every unsupported way between its endpoints. The test depends only on
  // the unsupported metric, so a single pass reaches the fixpoint.
  std::vector<const RiskySpec*> surviving;
  for (const RiskySpec& r : g.risky) {
    const Edge* e = g.find_edge(r.u, r.v);
    double best_unsupported = std::min(e->cost, spc[r.u][r.v]);
    if (g.supported_cost(r) < best_unsupported) surviving.push_back(&r);
  }

  std::set<NodeId> special;
  for (const RiskySpec* r : surviving) {
    special.insert(r->u);
    special.insert(r->v);
    special.insert(r->supports.begin(), r->supports.end());
  }
  special.insert(inst.starts.begin(), inst.starts.end());
  special.insert(inst.goals.begin(), inst.goals.end());

  SimplifiedGraph sg;
  sg.original_node_count = g.node_count;
  sg.coord_cost = g.coord_cost;
  sg.super_nodes.assign(special.begin(), special.end());

  detail::Adjacency adj(g);
  std::vector<bool> is_special(g.node_count, false);
  for (NodeId x : sg.super_nodes) is_special[x] = true;
  auto interior_ok = [&is_special](NodeId x) { return !is_special[x]; };

  for (std::size_t i = 0; i < sg.super_nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < sg.super_nodes.size(); ++j) {
      NodeId a = sg.super_nodes[i], b = sg.super_nodes[j];
      std::vector<NodeId> witness = detail::lex_shortest_path(adj, a, b, interior_ok);
      if (witness.empty()) continue;  // no connection free of other special nodes
      SuperEdge se;
      se.u = a;
      se.v = b;
      se.witness = std::move(witness);
      se.base_cost = 0.0;
      for (std::size_t h = 1; h < se.witness.size(); ++h)
        se.base_cost += g.find_edge(se.witness[h - 1], se.witness[h])->cost;
      se.supported_cost = se.base_cost;
      for (const RiskySpec* r : surviving) {
        if (pair_key(r->u, r->v) == pair_key(a, b)) {
          se.risky = true;
          se.supported_cost = g.supported_cost(*r);
          se.supports = r->supports;
          std::sort(se.supports.begin(), se.supports.end());
          break;
        }
      }
      sg.super_edges.push_back(std::move(se));
    }
  }
  sg.rebuild_lookups();
  return sg;
}

std::vector<SupportPair> enumerate_support_pairs(const SimplifiedGraph& sg) {
  std::vector<SupportPair> pairs;
  for (const SuperEdge& e : sg.super_edges) {
    if (!e.risky) continue;
    for (NodeId k : e.supports) pairs.push_back({e.u, e.v, k});
  }
  return pairs;
}

}  // namespace tcgre
