#pragma once

#include <string>

#include "tcgre/model.hpp"

// Deterministic instance generators. The same GenSpec always produces the
// same instance, byte for byte after serialization, across platforms.
//
// Families:
//   random       - |V| nodes, edge count round(edge_density * all pairs)
//                  (at least a spanning count), resampled until connected
//   rect_perfect - a full r x c grid with r * c = node_count, r as close to
//                  square as a factorization r >= 2 allows
//   voronoi      - nodes are random points in the unit square, edges are the
//                  Delaunay triangulation's edges, costs scale with length
//
// All costs are drawn on a 1/64 grid inside their ranges (ordinary edges
// [1,10], risky bases [15,30], reduced costs [1,5], coordination cost
// [0.5,2]), so every cost a solver can produce is an exact binary fraction
// and independently computed optima compare exactly.
//
// A risky_ratio share of edges (rounded up) is made risky; support nodes are
// sampled within two hops of the edge, excluding its endpoints. Starts are
// distinct nodes, goals are distinct nodes, sampled independently.

namespace tcgre {

struct GenSpec {
  std::string family = "random";
  int node_count = 6;
  int agent_count = 2;
  unsigned int seed = 12;
  double risky_ratio = 0.2;
  int supports_per_risky = 1;
  double edge_density = 0.3;  // random family only
};

// Throws std::invalid_argument on unsatisfiable specs (unknown family, more
// agents than nodes, rect_perfect without an r >= 2 factorization, negative
// ratios) and std::runtime_error when no connected graph can be drawn.
ProblemInstance generate(const GenSpec& spec);

}  // namespace tcgre
