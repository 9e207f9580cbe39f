// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "rcg/bell.hpp"
#include "rcg/community.hpp"
#include "rcg/critical.hpp"
#include "rcg/exactdist.hpp"
#include "rcg/sampler.hpp"

namespace {

void BM_BellTable(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rcg::build_bell_table(n, rcg::EdgeBias::from_w(1.0)).log_b(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_BellTable)->RangeMultiplier(2)->Range(128, 4096)->Complexity(benchmark::oNSquared);

void BM_ExpectedEdges(benchmark::State& state) {
  const auto n = state.range(0);
  const rcg::BellTable table = rcg::build_bell_table(n, rcg::EdgeBias::from_w(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(rcg::expected_edges(table, n));
}
BENCHMARK(BM_ExpectedEdges)->Arg(500)->Arg(2000);

void BM_SampleClusterGraph(benchmark::State& state) {
  const auto n = state.range(0);
  const rcg::ClusterSampler sampler(rcg::build_bell_table(n, rcg::EdgeBias::from_w(1.0)), n);
  rcg::RngStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng).num_blocks());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleClusterGraph)->Arg(100)->Arg(1000)->Arg(5000);

void BM_SolveCritical(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rcg::solve_critical(n, 0.5).p_star);
}
BENCHMARK(BM_SolveCritical)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_LouvainPpm(benchmark::State& state) {
  rcg::RngStream rng(7);
  const rcg::LabeledGraph lg = rcg::generate_ppm({{200, 200, 200, 200, 200}, 10.0 / 199.0, 1.0 / 80.0}, rng);
  const double gamma = rcg::gamma_resolution(10.0 / 199.0, 1.0 / 80.0, 0.5);
  for (auto _ : state) {
    rcg::RngStream run(11);
    benchmark::DoNotOptimize(rcg::louvain(lg.graph, gamma, run).num_blocks());
  }
}
BENCHMARK(BM_LouvainPpm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
