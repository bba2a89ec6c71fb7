// Microbenchmarks for the solver stack on fixed generated instances.

#include <benchmark/benchmark.h>

#include "tcgre/ces.hpp"
#include "tcgre/generate.hpp"
#include "tcgre/hjsg.hpp"
#include "tcgre/jsg.hpp"
#include "tcgre/matching.hpp"
#include "tcgre/simplify.hpp"

namespace {

tcgre::ProblemInstance fixed_instance(int nodes, int agents) {
  tcgre::GenSpec spec;
  spec.family = "random";
  spec.node_count = nodes;
  spec.agent_count = agents;
  spec.seed = 7;
  return tcgre::generate(spec);
}

void BM_BuildSimplified(benchmark::State& state) {
  tcgre::ProblemInstance inst = fixed_instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
    benchmark::DoNotOptimize(sg.super_edges.data());
  }
}
BENCHMARK(BM_BuildSimplified)->Arg(10)->Arg(20)->Arg(40);

void BM_Hjsg(benchmark::State& state) {
  tcgre::ProblemInstance inst =
      fixed_instance(12, static_cast<int>(state.range(0)));
  tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
  tcgre::HjsgOptions opt;
  for (auto _ : state) {
    tcgre::Solution sol = tcgre::dynamic_hjsg_search(sg, inst, opt);
    benchmark::DoNotOptimize(sol.total_cost);
  }
}
BENCHMARK(BM_Hjsg)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Jsg(benchmark::State& state) {
  tcgre::ProblemInstance inst =
      fixed_instance(12, static_cast<int>(state.range(0)));
  tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
  tcgre::JsgOptions opt;
  for (auto _ : state) {
    tcgre::FullJsg jsg = tcgre::build_full_jsg(sg, inst, opt);
    tcgre::Solution sol = tcgre::solve_jsg(jsg, sg, inst, opt);
    benchmark::DoNotOptimize(sol.total_cost);
  }
}
BENCHMARK(BM_Jsg)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Ces(benchmark::State& state) {
  tcgre::ProblemInstance inst = fixed_instance(10, 2);
  tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
  tcgre::CesOptions opt;
  for (auto _ : state) {
    tcgre::Solution sol = tcgre::ces_solve(sg, inst, opt);
    benchmark::DoNotOptimize(sol.total_cost);
  }
}
BENCHMARK(BM_Ces)->Unit(benchmark::kMillisecond);

void BM_Hces(benchmark::State& state) {
  tcgre::ProblemInstance inst = fixed_instance(10, 2);
  tcgre::SimplifiedGraph sg = tcgre::build_simplified(inst);
  tcgre::CesOptions opt;
  for (auto _ : state) {
    tcgre::Solution sol = tcgre::hces_solve(sg, inst, opt);
    benchmark::DoNotOptimize(sol.total_cost);
  }
}
BENCHMARK(BM_Hces)->Unit(benchmark::kMillisecond);

void BM_Matching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tcgre::MatchingInstance mi;
  mi.weights.assign(n, std::vector<double>(n, tcgre::kNoPair));
  unsigned int x = 12345;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x = x * 1664525u + 1013904223u;
      mi.weights[i][j] = static_cast<double>((x >> 16) % 100) / 4.0;
    }
  for (auto _ : state) {
    tcgre::Matching m = tcgre::max_weight_matching(mi);
    benchmark::DoNotOptimize(m.total_reduction);
  }
}
BENCHMARK(BM_Matching)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
