#include "tcgre/matching.hpp"

#include <algorithm>
#include <cmath>

namespace tcgre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Positive profit of a pair; absent and non-positive entries are worth 0,
// which makes padding to a square matrix harmless.
double profit(const MatchingInstance& m, int i, int j) {
  if (i >= static_cast<int>(m.weights.size())) return 0.0;
  if (j >= static_cast<int>(m.weights[i].size())) return 0.0;
  double w = m.weights[i][j];
  return (w > 0.0 && std::isfinite(w)) ? w : 0.0;
}

// Classic potential-based assignment solver, minimizing. cost is square.
// Returns row_of_col: the row assigned to each column.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_of_col(n);
  for (int j = 1; j <= n; ++j) row_of_col[j - 1] = p[j] - 1;
  return row_of_col;
}

// Maximum achievable total profit when the rows in banned_row and columns in
// banned_col are unavailable.
double best_value(const MatchingInstance& m, const std::vector<char>& banned_row,
                  const std::vector<char>& banned_col) {
  const int rows = static_cast<int>(m.weights.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.weights[0].size());
  std::vector<int> live_rows, live_cols;
  for (int i = 0; i < rows; ++i)
    if (!banned_row[i]) live_rows.push_back(i);
  for (int j = 0; j < cols; ++j)
    if (!banned_col[j]) live_cols.push_back(j);
  const int n = static_cast<int>(std::max(live_rows.size(), live_cols.size()));
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < static_cast<int>(live_rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(live_cols.size()); ++j)
      cost[i][j] = -profit(m, live_rows[i], live_cols[j]);
  std::vector<int> row_of_col = solve_assignment(cost);
  double value = 0.0;
  for (int j = 0; j < n; ++j) value -= cost[row_of_col[j]][j];
  return value;
}

}  // namespace

Matching max_weight_matching(const MatchingInstance& m) {
  Matching result;
  const int rows = static_cast<int>(m.weights.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.weights[0].size());
  if (rows == 0 || cols == 0) return result;

  std::vector<char> banned_row(rows, 0), banned_col(cols, 0);
  const double total = best_value(m, banned_row, banned_col);

  // Commit pairs in lexicographic order whenever doing so still allows the
  // optimum: the first-committable scan yields the lexicographically
  // smallest maximum-weight pair set.
  double committed = 0.0;
  for (int i = 0; i < rows; ++i) {
    if (banned_row[i]) continue;
    for (int j = 0; j < cols; ++j) {
      if (banned_col[j]) continue;
      double w = profit(m, i, j);
      if (w <= 0.0) continue;
      banned_row[i] = 1;
      banned_col[j] = 1;
      double rest = best_value(m, banned_row, banned_col);
      if (committed + w + rest >= total - kCostTolerance) {
        committed += w;
        result.pairs.emplace_back(i, j);
        break;  // row i is spoken for; move to the next row
      }
      banned_row[i] = 0;
      banned_col[j] = 0;
    }
  }
  result.total_reduction = committed;
  return result;
}

JointTransition joint_edge_cost(const SimplifiedGraph& sg, const std::vector<NodeId>& from,
                                const std::vector<NodeId>& to) {
  JointTransition out;
  const int robots = static_cast<int>(from.size());

  struct Mover {
    int robot;
    int edge;
  };
  std::vector<Mover> risky_movers;
  std::vector<int> stayers;  // robots staying on a node that supports something
  double cost = 0.0;
  for (int r = 0; r < robots; ++r) {
    if (from[r] == to[r]) {
      if (!sg.supporting_at(from[r]).empty()) stayers.push_back(r);
      continue;
    }
    int e = sg.edge_index(from[r], to[r]);
    if (e < 0) return out;  // not a super edge: illegal transition
    cost += sg.super_edges[e].base_cost;
    if (sg.super_edges[e].risky) risky_movers.push_back({r, e});
  }

  if (!stayers.empty() && !risky_movers.empty()) {
    MatchingInstance mi;
    mi.weights.assign(stayers.size(), std::vector<double>(risky_movers.size(), kNoPair));
    for (std::size_t i = 0; i < stayers.size(); ++i) {
      NodeId k = from[stayers[i]];
      for (std::size_t j = 0; j < risky_movers.size(); ++j) {
        const SuperEdge& e = sg.super_edges[risky_movers[j].edge];
        if (std::find(e.supports.begin(), e.supports.end(), k) != e.supports.end())
          mi.weights[i][j] = e.base_cost - e.supported_cost;
      }
    }
    Matching match = max_weight_matching(mi);
    cost -= match.total_reduction;
    for (auto [i, j] : match.pairs) {
      JointTransition::Coordination c;
      c.receiver = risky_movers[j].robot;
      c.supporter = stayers[i];
      c.edge = risky_movers[j].edge;
      c.support_node = from[stayers[i]];
      out.coordinations.push_back(c);
    }
    std::sort(out.coordinations.begin(), out.coordinations.end(),
              [](const auto& a, const auto& b) { return a.receiver < b.receiver; });
  }
  out.cost = cost;
  return out;
}

}  // namespace tcgre
