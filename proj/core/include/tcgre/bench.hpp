#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tcgre/model.hpp"

// Benchmark harness: runs a grid of generated instances
// (families x node counts x agent counts x repeats) through a set of
// solvers, streaming one CSV record per run in deterministic order. Every
// produced solution is re-checked against the original instance, and the
// costs of the solvers that claim optimality (hjsg, jsg, oracle) are
// compared pairwise — any disagreement beyond tolerance is reported as a
// violation, as is any ces/hces mismatch. Record fields other than wall_time
// are reproducible run over run.

namespace tcgre {

struct BenchConfig {
  std::vector<std::string> solvers;  // hjsg, jsg, ces, hces, oracle
  std::vector<std::string> families;
  std::vector<int> node_counts;
  std::vector<int> agent_counts;
  int repeats = 3;
  double timeout_seconds = 60.0;
  double risky_ratio = 0.2;
  int supports_per_risky = 1;
  double edge_density = 0.3;
  unsigned int seed = 12;
  int workers = 1;

  // When non-null and set to true (e.g. from a signal handler), the run
  // stops starting new instances; records already produced are kept.
  const std::atomic<bool>* interrupt = nullptr;
};

struct BenchRecord {
  std::string instance_id;
  std::string family;
  int nodes = 0;
  int agents = 0;
  std::string solver;
  std::optional<double> total_cost;  // empty: timeout, refusal or no path
  double wall_time = 0.0;
  bool timed_out = false;
  std::int64_t visited = 0;
  std::int64_t expanded = 0;
  unsigned int seed = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<std::string> violations;  // defects found while cross-checking
  bool interrupted = false;
};

// Parses a config of the form
//   {"solvers": ["hjsg","jsg"], "families": ["random"], "node_counts": [6],
//    "agent_counts": [2], "repeats": 3, "timeout_seconds": 60,
//    "risky_ratio": 0.2, "supports_per_risky": 1, "edge_density": 0.3,
//    "seed": 12, "workers": 1}
// (solvers/families/node_counts/agent_counts required, the rest optional).
BenchConfig load_bench_config(const std::string& text);

// The CSV column order, fixed:
//   instance,family,nodes,agents,solver,total_cost,wall_time,timed_out,
//   visited,expanded,seed
std::string bench_csv_header();
std::string to_csv_line(const BenchRecord& record);

// Runs the grid. Records stream to `csv` (with header) as they complete, in
// instance order; a human-readable completion/median summary goes to
// `summary` at the end. Either stream may be null.
BenchResult run_bench(const BenchConfig& config, std::ostream* csv, std::ostream* summary);

}  // namespace tcgre
