#include "tcgre/bench.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "tcgre/ces.hpp"
#include "tcgre/generate.hpp"
#include "tcgre/hjsg.hpp"
#include "tcgre/jsg.hpp"
#include "tcgre/oracle.hpp"
#include "tcgre/simplify.hpp"

namespace tcgre {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kKnownSolvers = {"hjsg", "jsg", "ces", "hces", "oracle"};
// Solvers that are exact: all of them must agree on the optimal cost.
const std::vector<std::string> kOptimalSolvers = {"hjsg", "jsg", "oracle"};

std::string format_double(double x, const char* pattern) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, x);
  return std::string(buf);
}

struct InstanceCell {
  std::string id;
  GenSpec spec;
};

struct InstanceOutcome {
  std::vector<BenchRecord> records;
  std::vector<std::string> violations;
};

// Runs every configured solver on one instance and cross-checks the results.
InstanceOutcome run_instance(const BenchConfig& config, const InstanceCell& cell) {
  InstanceOutcome out;
  ProblemInstance inst = generate(cell.spec);
  inst.horizon = cell.spec.node_count * cell.spec.agent_count;

  SimplifiedGraph sg = build_simplified(inst);

  std::map<std::string, double> costs;
  for (const std::string& solver : config.solvers) {
    BenchRecord rec;
    rec.instance_id = cell.id;
    rec.family = cell.spec.family;
    rec.nodes = cell.spec.node_count;
    rec.agents = cell.spec.agent_count;
    rec.solver = solver;
    rec.seed = cell.spec.seed;

    Solution sol;
    bool refused = false;
    std::string refusal;
    try {
      if (solver == "hjsg") {
        HjsgOptions opt;
        opt.deadline_seconds = config.timeout_seconds;
        sol = dynamic_hjsg_search(sg, inst, opt);
      } else if (solver == "jsg") {
        JsgOptions opt;
        opt.deadline_seconds = config.timeout_seconds;
        auto t0 = std::chrono::steady_clock::now();
        FullJsg jsg = build_full_jsg(sg, inst, opt);
        sol = solve_jsg(jsg, sg, inst, opt);
        // The build is part of the solver's bill.
        sol.stats.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      } else if (solver == "ces" || solver == "hces") {
        CesOptions opt;
        opt.deadline_seconds = config.timeout_seconds;
        sol = solver == "ces" ? ces_solve(sg, inst, opt) : hces_solve(sg, inst, opt);
      } else if (solver == "oracle") {
        OracleLimits limits;
        limits.deadline_seconds = config.timeout_seconds;
        sol = oracle_solve(inst, limits);
      } else {
        throw std::invalid_argument("bench: unknown solver '" + solver + "'");
      }
    } catch (const std::exception& e) {
      refused = true;
      refusal = e.what();
    }

    if (refused) {
      out.violations.push_back(cell.id + "/" + solver + ": refused: " + refusal);
    } else {
      rec.total_cost = sol.total_cost;
      rec.wall_time = sol.stats.wall_time_seconds;
      rec.timed_out = sol.stats.timed_out;
      rec.visited = sol.stats.visited_joint_states;
      rec.expanded = sol.stats.expanded_joint_edges;
      ValidationReport report = check_solution(inst, sol);
      if (!report.ok())
        out.violations.push_back(cell.id + "/" + solver +
                                 ": solution rejected: " + report.violations.front());
      if (sol.total_cost.has_value()) costs[solver] = *sol.total_cost;
    }
    out.records.push_back(std::move(rec));
  }

  for (std::size_t i = 0; i < kOptimalSolvers.size(); ++i) {
    for (std::size_t j = i + 1; j < kOptimalSolvers.size(); ++j) {
      auto a = costs.find(kOptimalSolvers[i]);
      auto b = costs.find(kOptimalSolvers[j]);
      if (a == costs.end() || b == costs.end()) continue;
      if (std::abs(a->second - b->second) > kCostTolerance)
        out.violations.push_back(cell.id + ": " + a->first + " cost " +
                                 format_double(a->second, "%.17g") + " disagrees with " +
                                 b->first + " cost " + format_double(b->second, "%.17g"));
    }
  }
  auto c = costs.find("ces");
  auto h = costs.find("hces");
  if (c != costs.end() && h != costs.end() && std::abs(c->second - h->second) > kCostTolerance)
    out.violations.push_back(cell.id + ": ces cost " + format_double(c->second, "%.17g") +
                             " disagrees with hces cost " + format_double(h->second, "%.17g"));
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

BenchConfig load_bench_config(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("bench config: parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("bench config: top level must be an object");

  BenchConfig config;
  auto require = [&j](const char* name) -> const ordered_json& {
    if (!j.contains(name))
      throw std::runtime_error(std::string("bench config: missing field '") + name + "'");
    return j.at(name);
  };
  config.solvers = require("solvers").get<std::vector<std::string>>();
  config.families = require("families").get<std::vector<std::string>>();
  config.node_counts = require("node_counts").get<std::vector<int>>();
  config.agent_counts = require("agent_counts").get<std::vector<int>>();
  if (j.contains("repeats")) config.repeats = j.at("repeats").get<int>();
  if (j.contains("timeout_seconds")) config.timeout_seconds = j.at("timeout_seconds").get<double>();
  if (j.contains("risky_ratio")) config.risky_ratio = j.at("risky_ratio").get<double>();
  if (j.contains("supports_per_risky"))
    config.supports_per_risky = j.at("supports_per_risky").get<int>();
  if (j.contains("edge_density")) config.edge_density = j.at("edge_density").get<double>();
  if (j.contains("seed")) config.seed = j.at("seed").get<unsigned int>();
  if (j.contains("workers")) config.workers = j.at("workers").get<int>();

  if (config.solvers.empty()) throw std::runtime_error("bench config: no solvers listed");
  for (const std::string& s : config.solvers)
    if (std::find(kKnownSolvers.begin(), kKnownSolvers.end(), s) == kKnownSolvers.end())
      throw std::runtime_error("bench config: unknown solver '" + s + "'");
  if (config.families.empty()) throw std::runtime_error("bench config: no families listed");
  if (config.node_counts.empty() || config.agent_counts.empty())
    throw std::runtime_error("bench config: node_counts and agent_counts must be non-empty");
  if (config.repeats < 1) throw std::runtime_error("bench config: repeats must be positive");
  if (config.workers < 1) throw std::runtime_error("bench config: workers must be positive");
  return config;
}

std::string bench_csv_header() {
  return "instance,family,nodes,agents,solver,total_cost,wall_time,timed_out,visited,expanded,"
         "seed";
}

std::string to_csv_line(const BenchRecord& rec) {
  std::string line;
  line += rec.instance_id;
  line += ',' + rec.family;
  line += ',' + std::to_string(rec.nodes);
  line += ',' + std::to_string(rec.agents);
  line += ',' + rec.solver;
  line += ',';
  if (rec.total_cost.has_value()) line += format_double(*rec.total_cost, "%.17g");
  line += ',' + format_double(rec.wall_time, "%.6f");
  line += rec.timed_out ? ",true" : ",false";
  line += ',' + std::to_string(rec.visited);
  line += ',' + std::to_string(rec.expanded);
  line += ',' + std::to_string(rec.seed);
  return line;
}

BenchResult run_bench(const BenchConfig& config, std::ostream* csv, std::ostream* summary) {
  std::vector<InstanceCell> cells;
  for (const std::string& family : config.families) {
    for (int nodes : config.node_counts) {
      for (int agents : config.agent_counts) {
        for (int repeat = 0; repeat < config.repeats; ++repeat) {
          GenSpec spec;
          spec.family = family;
          spec.node_count = nodes;
          spec.agent_count = agents;
          spec.seed = config.seed + static_cast<unsigned int>(repeat);
          spec.risky_ratio = config.risky_ratio;
          spec.supports_per_risky = config.supports_per_risky;
          spec.edge_density = config.edge_density;
          InstanceCell cell;
          cell.spec = spec;
          cell.id = family + "-n" + std::to_string(nodes) + "-a" + std::to_string(agents) + "-s" +
                    std::to_string(spec.seed);
          cells.push_back(std::move(cell));
        }
      }
    }
  }

  BenchResult result;
  if (csv) *csv << bench_csv_header() << '\n' << std::flush;

  auto interrupted = [&config]() {
    return config.interrupt != nullptr && config.interrupt->load();
  };
  auto emit = [&](InstanceOutcome&& outcome) {
    for (BenchRecord& rec : outcome.records) {
      if (csv) *csv << to_csv_line(rec) << '\n' << std::flush;
      result.records.push_back(std::move(rec));
    }
    for (std::string& v : outcome.violations) result.violations.push_back(std::move(v));
  };

  if (config.workers <= 1) {
    for (const InstanceCell& cell : cells) {
      if (interrupted()) {
        result.interrupted = true;
        break;
      }
      emit(run_instance(config, cell));
    }
  } else {
    // Parallel path: instances are claimed in order; finished outcomes enter
    // a reorder buffer so the emitted stream matches the sequential order.
    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<InstanceOutcome>> slots(cells.size());
    std::size_t next_claim = 0;

    auto worker = [&]() {
      while (true) {
        std::size_t mine;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next_claim >= cells.size() || interrupted()) return;
          mine = next_claim++;
        }
        InstanceOutcome outcome = run_instance(config, cells[mine]);
        {
          std::lock_guard<std::mutex> lock(mu);
          slots[mine] = std::move(outcome);
        }
        cv.notify_all();
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < config.workers; ++w) threads.emplace_back(worker);

    std::size_t next_emit = 0;
    {
      std::unique_lock<std::mutex> lock(mu);
      while (next_emit < cells.size()) {
        if (slots[next_emit].has_value()) {
          InstanceOutcome outcome = std::move(*slots[next_emit]);
          slots[next_emit].reset();
          ++next_emit;
          lock.unlock();
          emit(std::move(outcome));
          lock.lock();
          continue;
        }
        if (interrupted() && next_claim <= next_emit) {
          result.interrupted = true;
          break;
        }
        cv.wait_for(lock, std::chrono::milliseconds(50));
      }
    }
    for (std::thread& t : threads) t.join();
    // Emit whatever finished beyond the interruption point, still in order.
    for (std::size_t i = next_emit; i < slots.size(); ++i) {
      if (!slots[i].has_value()) break;
      emit(std::move(*slots[i]));
    }
    if (next_emit < cells.size()) result.interrupted = result.interrupted || interrupted();
  }

  if (summary) {
    std::map<std::string, std::vector<double>> walls;
    std::map<std::string, std::pair<int, int>> completion;  // solver -> (done, runs)
    std::map<std::pair<std::string, int>, std::vector<double>> walls_by_agents;
    for (const BenchRecord& rec : result.records) {
      walls[rec.solver].push_back(rec.wall_time);
      auto& [done, runs] = completion[rec.solver];
      ++runs;
      if (!rec.timed_out && rec.total_cost.has_value()) ++done;
      walls_by_agents[{rec.solver, rec.agents}].push_back(rec.wall_time);
    }
    *summary << "# completion\n";
    *summary << "solver,runs,completed,rate\n";
    for (const auto& [solver, counts] : completion) {
      const auto& [done, runs] = counts;
      *summary << solver << ',' << runs << ',' << done << ','
               << format_double(runs > 0 ? static_cast<double>(done) / runs : 0.0, "%.3f")
               << '\n';
    }
    *summary << "# median wall time by agent count\n";
    *summary << "solver,agents,median_wall\n";
    for (const auto& [key, times] : walls_by_agents)
      *summary << key.first << ',' << key.second << ',' << format_double(median(times), "%.6f")
               << '\n';
    if (result.interrupted) *summary << "# interrupted: partial results\n";
    if (!result.violations.empty()) {
      *summary << "# violations\n";
      for (const std::string& v : result.violations) *summary << v << '\n';
    }
    *summary << std::flush;
  }
  return result;
}

}  // namespace tcgre
