#include <benchmark/benchmark.h>

#include "factorlab/edge_coloring.hpp"
#include "factorlab/graph.hpp"

namespace {

void BM_VizingComplete(benchmark::State& state) {
  const factorlab::Graph g = factorlab::graphs::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorlab::vizing_color(g));
}
BENCHMARK(BM_VizingComplete)->RangeMultiplier(2)->Range(8, 64);

void BM_ChromaticIndexPetersen(benchmark::State& state) {
  const factorlab::Graph g = factorlab::graphs::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(factorlab::chromatic_index(g));
}
BENCHMARK(BM_ChromaticIndexPetersen);

void BM_DeltaCriticalCheck(benchmark::State& state) {
  const factorlab::Graph g = factorlab::graphs::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorlab::is_delta_critical(g));
}
BENCHMARK(BM_DeltaCriticalCheck)->Arg(7)->Arg(15);

}  // namespace
