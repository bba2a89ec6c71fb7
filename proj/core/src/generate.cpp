#include "tcgre/generate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace tcgre {
namespace {

// All randomness flows through explicit draws on a mt19937 stream, never
// through distribution objects, whose output may differ across standard
// library implementations.
struct Rng {
  std::mt19937 eng;

  explicit Rng(unsigned int seed) : eng(seed) {}

  std::uint32_t below(std::uint32_t n) { return eng() % n; }

  // Uniform draw on the 1/64 grid inside [lo, hi]; lo and hi are themselves
  // multiples of 1/64.
  double dyadic(double lo, double hi) {
    auto steps = static_cast<std::uint32_t>(std::lround((hi - lo) * 64.0));
    return lo + static_cast<double>(below(steps + 1)) / 64.0;
  }

  // First k elements of a shuffle of 0..n-1.
  std::vector<int> sample(int n, int k) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(below(static_cast<std::uint32_t>(n - i)));
      std::swap(ids[i], ids[j]);
    }
    ids.resize(k);
    return ids;
  }
};

bool connected(int nodes, const std::vector<Edge>& edges) {
  if (nodes <= 0) return false;
  std::vector<std::vector<int>> adj(nodes);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(nodes, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int w : adj[x])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == nodes;
}

std::vector<Edge> random_edges(int nodes, double density, Rng& rng) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < nodes; ++i)
    for (int j = i + 1; j < nodes; ++j) all.emplace_back(i, j);
  int want = static_cast<int>(std::lround(density * static_cast<double>(all.size())));
  want = std::clamp(want, nodes - 1, static_cast<int>(all.size()));
  std::vector<int> picked = rng.sample(static_cast<int>(all.size()), want);
  std::sort(picked.begin(), picked.end());
  std::vector<Edge> edges;
  for (int p : picked) edges.push_back({all[p].first, all[p].second, rng.dyadic(1.0, 10.0)});
  return edges;
}

std::vector<Edge> grid_edges(int nodes, Rng& rng) {
  int rows = 0;
  for (int r = 2; r * r <= nodes; ++r)
    if (nodes % r == 0) rows = r;
  if (rows == 0)
    throw std::invalid_argument("rect_perfect: node count " + std::to_string(nodes) +
                                " has no r x c factorization with r >= 2");
  int cols = nodes / rows;
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int id = r * cols + c;
      if (c + 1 < cols) edges.push_back({id, id + 1, 0.0});
      if (r + 1 < rows) edges.push_back({id, id + cols, 0.0});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (Edge& e : edges) e.cost = rng.dyadic(1.0, 10.0);
  return edges;
}

// Bowyer-Watson Delaunay triangulation of points indexed 0..n-1; returns the
// triangulation's edges. Points come from a 2^20 lattice, which makes exact
// duplicates and most degeneracies vanishingly unlikely; a failed attempt is
// retried by the caller with fresh points.
std::vector<std::pair<int, int>> delaunay_edges(const std::vector<std::pair<double, double>>& pts) {
  struct Tri {
    int a, b, c;
  };
  const int n = static_cast<int>(pts.size());
  std::vector<std::pair<double, double>> p = pts;
  p.emplace_back(-10.0, -10.0);  // super triangle
  p.emplace_back(10.0, -10.0);
  p.emplace_back(0.0, 10.0);
  std::vector<Tri> tris = {{n, n + 1, n + 2}};

  auto in_circumcircle = [&p](const Tri& t, int q) {
    long double ax = p[t.a].first - p[q].first, ay = p[t.a].second - p[q].second;
    long double bx = p[t.b].first - p[q].first, by = p[t.b].second - p[q].second;
    long double cx = p[t.c].first - p[q].first, cy = p[t.c].second - p[q].second;
    long double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                      (bx * bx + by * by) * (ax * cy - cx * ay) +
                      (cx * cx + cy * cy) * (ax * by - bx * ay);
    // det's sign assumes counter-clockwise (a, b, c).
    long double orient = (p[t.b].first - p[t.a].first) * (p[t.c].second - p[t.a].second) -
                         (p[t.c].first - p[t.a].first) * (p[t.b].second - p[t.a].second);
    return orient > 0 ? det > 0 : det < 0;
  };

  for (int q = 0; q < n; ++q) {
    std::vector<Tri> keep;
    std::map<std::pair<int, int>, int> boundary;  // edge -> times seen among bad
    for (const Tri& t : tris) {
      if (in_circumcircle(t, q)) {
        auto add = [&boundary](int x, int y) {
          if (x > y) std::swap(x, y);
          ++boundary[{x, y}];
        };
        add(t.a, t.b);
        add(t.b, t.c);
        add(t.a, t.c);
      } else {
        keep.push_back(t);
      }
    }
    tris = std::move(keep);
    for (const auto& [edge, count] : boundary)
      if (count == 1) tris.push_back({edge.first, edge.second, q});
  }

  std::set<std::pair<int, int>> edges;
  for (const Tri& t : tris) {
    if (t.a >= n || t.b >= n || t.c >= n) continue;  // touches the super triangle
    auto add = [&edges](int x, int y) {
      if (x > y) std::swap(x, y);
      edges.insert({x, y});
    };
    add(t.a, t.b);
    add(t.b, t.c);
    add(t.a, t.c);
  }
  return {edges.begin(), edges.end()};
}

std::vector<Edge> voronoi_edges(int nodes, Rng& rng) {
  if (nodes < 2) throw std::invalid_argument("voronoi: at least 2 nodes required");
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < nodes; ++i) {
    double x = static_cast<double>(rng.below(1u << 20)) / static_cast<double>(1u << 20);
    double y = static_cast<double>(rng.below(1u << 20)) / static_cast<double>(1u << 20);
    pts.emplace_back(x, y);
  }
  std::vector<std::pair<int, int>> pairs;
  if (nodes == 2) {
    pairs = {{0, 1}};
  } else {
    pairs = delaunay_edges(pts);
  }
  double longest = 0.0;
  auto length = [&pts](const std::pair<int, int>& e) {
    double dx = pts[e.first].first - pts[e.second].first;
    double dy = pts[e.first].second - pts[e.second].second;
    return std::sqrt(dx * dx + dy * dy);
  };
  for (const auto& e : pairs) longest = std::max(longest, length(e));
  std::vector<Edge> edges;
  for (const auto& e : pairs) {
    // Map length onto [1, 10] and snap to the 1/64 grid.
    double scaled = longest > 0.0 ? 1.0 + 9.0 * length(e) / longest : 1.0;
    double snapped = std::lround(scaled * 64.0) / 64.0;
    edges.push_back({e.first, e.second, std::clamp(snapped, 1.0, 10.0)});
  }
  return edges;
}

// Nodes within two hops of either endpoint, endpoints excluded.
std::vector<NodeId> support_candidates(int nodes, const std::vector<Edge>& edges, NodeId u,
                                       NodeId v) {
  std::vector<std::vector<int>> adj(nodes);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> hops(nodes, -1);
  std::queue<int> q;
  hops[u] = 0;
  hops[v] = 0;
  q.push(u);
  q.push(v);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (hops[x] == 2) continue;
    for (int w : adj[x])
      if (hops[w] < 0) {
        hops[w] = hops[x] + 1;
        q.push(w);
      }
  }
  std::vector<NodeId> out;
  for (int x = 0; x < nodes; ++x)
    if (x != u && x != v && hops[x] > 0) out.push_back(x);
  if (out.empty()) {
    for (int x = 0; x < nodes; ++x)
      if (x != u && x != v) out.push_back(x);
  }
  return out;
}

}  // namespace

ProblemInstance generate(const GenSpec& spec) {
  if (spec.node_count < 1) throw std::invalid_argument("generate: node_count must be positive");
  if (spec.agent_count < 1) throw std::invalid_argument("generate: agent_count must be positive");
  if (spec.agent_count > spec.node_count)
    throw std::invalid_argument("generate: more agents than nodes");
  if (spec.risky_ratio < 0.0 || spec.risky_ratio > 1.0)
    throw std::invalid_argument("generate: risky_ratio must be within [0,1]");
  if (spec.supports_per_risky < 1)
    throw std::invalid_argument("generate: supports_per_risky must be positive");
  if (spec.family != "random" && spec.family != "rect_perfect" && spec.family != "voronoi")
    throw std::invalid_argument("generate: unknown family '" + spec.family + "'");

  ProblemInstance inst;
  inst.graph.node_count = spec.node_count;

  // Graph structure and base costs, retried until connected.
  const int attempts = 200;
  bool built = false;
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    rng = Rng(spec.seed + 1000003u * static_cast<unsigned int>(attempt));
    if (spec.family == "random")
      inst.graph.edges = random_edges(spec.node_count, spec.edge_density, rng);
    else if (spec.family == "rect_perfect")
      inst.graph.edges = grid_edges(spec.node_count, rng);
    else
      inst.graph.edges = voronoi_edges(spec.node_count, rng);
    if (connected(spec.node_count, inst.graph.edges)) {
      built = true;
      break;
    }
  }
  if (!built) throw std::runtime_error("generate: could not draw a connected graph");

  // Risky edges: resample their base cost upward, then attach reduced costs
  // and nearby support nodes.
  const int edge_count = static_cast<int>(inst.graph.edges.size());
  const int risky_count =
      static_cast<int>(std::ceil(spec.risky_ratio * static_cast<double>(edge_count)));
  std::vector<int> picked = rng.sample(edge_count, risky_count);
  std::sort(picked.begin(), picked.end());
  for (int idx : picked) {
    Edge& e = inst.graph.edges[idx];
    e.cost = rng.dyadic(15.0, 30.0);
    RiskySpec r;
    r.u = e.u;
    r.v = e.v;
    r.reduced_cost = rng.dyadic(1.0, 5.0);
    std::vector<NodeId> candidates =
        support_candidates(spec.node_count, inst.graph.edges, e.u, e.v);
    if (candidates.empty())
      throw std::invalid_argument("generate: graph too small to place support nodes");
    int take = std::min<int>(spec.supports_per_risky, static_cast<int>(candidates.size()));
    std::vector<int> chosen = rng.sample(static_cast<int>(candidates.size()), take);
    for (int c : chosen) r.supports.push_back(candidates[c]);
    std::sort(r.supports.begin(), r.supports.end());
    inst.graph.risky.push_back(std::move(r));
  }

  inst.graph.coord_cost = rng.dyadic(0.5, 2.0);

  std::vector<int> starts = rng.sample(spec.node_count, spec.agent_count);
  std::vector<int> goals = rng.sample(spec.node_count, spec.agent_count);
  inst.starts.assign(starts.begin(), starts.end());
  inst.goals.assign(goals.begin(), goals.end());

  ValidationReport report = validate_instance(inst);
  if (!report.ok())
    throw std::logic_error("generate: produced an invalid instance: " + report.violations.front());
  return inst;
}

}  // namespace tcgre
