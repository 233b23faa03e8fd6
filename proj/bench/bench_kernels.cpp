// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "xint/extremal.hpp"
#include "xint/families.hpp"

using namespace xint;

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_independent(g, r));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_independent(g, r));
}

void BM_DisjointnessSerial(benchmark::State& state) {
  const SetFamily f = enumerate_independent(Graph::empty(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::disjointness_graph(f));
  state.counters["members"] = static_cast<double>(f.size());
}

void BM_DisjointnessParallel(benchmark::State& state) {
  const SetFamily f = enumerate_independent(Graph::empty(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(disjointness_graph(f));
  state.counters["members"] = static_cast<double>(f.size());
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Args({20, 4})->Args({24, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({20, 4})->Args({24, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DisjointnessSerial)->Args({12, 4})->Args({14, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjointnessParallel)->Args({12, 4})->Args({14, 5})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
