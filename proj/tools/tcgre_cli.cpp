// Command line front end: generate instances, solve them, run benchmark
// sweeps, and dump simplified graphs for debugging.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcgre/bench.hpp"
#include "tcgre/ces.hpp"
#include "tcgre/generate.hpp"
#include "tcgre/hjsg.hpp"
#include "tcgre/io.hpp"
#include "tcgre/jsg.hpp"
#include "tcgre/oracle.hpp"
#include "tcgre/simplify.hpp"

namespace {

std::atomic<bool> g_interrupt{false};

void handle_sigint(int) { g_interrupt.store(true); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Empty path or "-" means stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_gen(const tcgre::GenSpec& spec, const std::string& out_path) {
  tcgre::ProblemInstance inst = tcgre::generate(spec);
  write_output(out_path, tcgre::serialize_instance(inst));
  return 0;
}

int cmd_solve(const std::string& solver, const std::string& in_path, double timeout,
              const std::string& out_path) {
  tcgre::ProblemInstance inst = tcgre::load_instance_file(in_path);
  tcgre::Solution sol;
  if (solver == "oracle") {
    tcgre::OracleLimits limits;
    limits.deadline_seconds = timeout;
    sol = tcgre::oracle_solve(inst, limits);
  } else {
    tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
    if (solver == "hjsg") {
      tcgre::HjsgOptions opt;
      opt.deadline_seconds = timeout;
      sol = tcgre::dynamic_hjsg_search(sg, inst, opt);
    } else if (solver == "jsg") {
      tcgre::JsgOptions opt;
      opt.deadline_seconds = timeout;
      tcgre::FullJsg jsg = tcgre::build_full_jsg(sg, inst, opt);
      sol = tcgre::solve_jsg(jsg, sg, inst, opt);
    } else if (solver == "ces") {
      tcgre::CesOptions opt;
      opt.deadline_seconds = timeout;
      sol = tcgre::ces_solve(sg, inst, opt);
    } else if (solver == "hces") {
      tcgre::CesOptions opt;
      opt.deadline_seconds = timeout;
      sol = tcgre::hces_solve(sg, inst, opt);
    } else {
      std::cerr << "unknown solver '" << solver << "'\n";
      return 1;
    }
  }

  tcgre::ValidationReport report = tcgre::check_solution(inst, sol);
  if (!report.ok()) {
    for (const std::string& v : report.violations) std::cerr << "violation: " << v << '\n';
    return 1;
  }
  write_output(out_path, tcgre::serialize_solution(sol));
  if (!sol.found()) {
    std::cerr << (sol.stats.timed_out ? "timed out without a schedule\n"
                                      : "no schedule found\n");
    return 2;
  }
  return 0;
}

int cmd_bench(const std::string& config_path, const std::string& out_path,
              const std::string& summary_path) {
  tcgre::BenchConfig config = tcgre::load_bench_config(read_file(config_path));
  config.interrupt = &g_interrupt;
  std::signal(SIGINT, handle_sigint);

  std::ofstream csv;
  std::ostream* csv_out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    csv.open(out_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + out_path);
    csv_out = &csv;
  }
  std::ofstream summary_file;
  std::ostream* summary_out = &std::cerr;
  if (!summary_path.empty()) {
    summary_file.open(summary_path, std::ios::binary);
    if (!summary_file) throw std::runtime_error("cannot write " + summary_path);
    summary_out = &summary_file;
  }

  tcgre::BenchResult result = tcgre::run_bench(config, csv_out, summary_out);
  for (const std::string& v : result.violations) std::cerr << "violation: " << v << '\n';
  if (result.interrupted) std::cerr << "interrupted, partial results written\n";
  return result.violations.empty() ? (result.interrupted ? 130 : 0) : 1;
}

int cmd_simplify(const std::string& in_path, const std::string& out_path) {
  tcgre::ProblemInstance inst = tcgre::load_instance_file(in_path);
  tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
  nlohmann::ordered_json j;
  j["coord_cost"] = sg.coord_cost;
  j["super_nodes"] = sg.super_nodes;
  j["super_edges"] = nlohmann::ordered_json::array();
  for (const tcgre::SuperEdge& e : sg.super_edges) {
    nlohmann::ordered_json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["base_cost"] = e.base_cost;
    je["risky"] = e.risky;
    if (e.risky) {
      je["supported_cost"] = e.supported_cost;
      je["supports"] = e.supports;
    }
    je["witness_path"] = e.witness;
    j["super_edges"].push_back(std::move(je));
  }
  write_output(out_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team coordination on graphs with risky edges"};
  app.require_subcommand(1);

  // gen
  tcgre::GenSpec spec;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", spec.family, "random | rect_perfect | voronoi")
      ->capture_default_str();
  gen->add_option("--nodes", spec.node_count, "number of nodes")->capture_default_str();
  gen->add_option("--agents", spec.agent_count, "number of robots")->capture_default_str();
  gen->add_option("--seed", spec.seed, "random seed")->capture_default_str();
  gen->add_option("--risky-ratio", spec.risky_ratio, "fraction of edges made risky")
      ->capture_default_str();
  gen->add_option("--supports-per-risky", spec.supports_per_risky,
                  "support nodes per risky edge")
      ->capture_default_str();
  gen->add_option("--edge-density", spec.edge_density,
                  "extra-edge density for the random family")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  std::string solver = "hjsg";
  std::string solve_in;
  std::string solve_out;
  double timeout = 60.0;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--solver", solver, "hjsg | jsg | ces | hces | oracle")
      ->capture_default_str();
  solve->add_option("--in", solve_in, "instance JSON file")->required();
  solve->add_option("--timeout", timeout, "time budget in seconds")->capture_default_str();
  solve->add_option("--out", solve_out, "solution file (default stdout)");

  // bench
  std::string bench_config;
  std::string bench_out;
  std::string bench_summary;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark sweep");
  bench->add_option("--config", bench_config, "benchmark config JSON")->required();
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_option("--summary", bench_summary, "summary output file (default stderr)");

  // simplify
  std::string simplify_in;
  std::string simplify_out;
  CLI::App* simplify = app.add_subcommand("simplify", "Dump an instance's simplified graph");
  simplify->add_option("--in", simplify_in, "instance JSON file")->required();
  simplify->add_option("--out", simplify_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(spec, gen_out);
    if (solve->parsed()) return cmd_solve(solver, solve_in, timeout, solve_out);
    if (bench->parsed()) return cmd_bench(bench_config, bench_out, bench_summary);
    if (simplify->parsed()) return cmd_simplify(simplify_in, simplify_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
