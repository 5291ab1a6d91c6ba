#include <benchmark/benchmark.h>

#include "subcluster/cluster.hpp"
#include "subcluster/instance.hpp"
#include "subcluster/minimize.hpp"

namespace {

using namespace subcluster;

Instance bench_instance(int n, double density = 0.5) {
  RandomInstanceParams params;
  params.seed = 12345;
  params.n = n;
  params.density = density;
  return random_instance(params);
}

void BM_CutEvaluation(benchmark::State& state) {
  const Instance instance = bench_instance(static_cast<int>(state.range(0)), 1.0);
  const CutOracle oracle(instance.graph());
  ElementSet half;
  for (int i = 0; i < instance.size(); i += 2) half.push_back(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle(half));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CutEvaluation)->Arg(16)->Arg(64)->Arg(256);

void BM_QueyranneMin(benchmark::State& state) {
  const Instance instance = bench_instance(static_cast<int>(state.range(0)));
  const CutOracle oracle(instance.graph());
  for (auto _ : state) {
    benchmark::DoNotOptimize(queyranne_min(oracle));
  }
  state.counters["oracle_calls"] =
      static_cast<double>(oracle.call_count()) / static_cast<double>(state.iterations());
}
BENCHMARK(BM_QueyranneMin)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

void BM_GreedySplitting(benchmark::State& state) {
  const Instance instance = bench_instance(static_cast<int>(state.range(0)));
  const CutOracle oracle(instance.graph());
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_splitting(oracle, 4));
  }
}
BENCHMARK(BM_GreedySplitting)->Arg(12)->Arg(24);

void BM_BruteForcePartition(benchmark::State& state) {
  const Instance instance = bench_instance(static_cast<int>(state.range(0)));
  const CutOracle oracle(instance.graph());
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_best_partition(oracle, 3, instance.grouping(), 0.0));
  }
}
BENCHMARK(BM_BruteForcePartition)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
