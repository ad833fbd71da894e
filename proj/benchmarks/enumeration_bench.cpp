#include <benchmark/benchmark.h>

#include "factorlab/enumeration.hpp"

namespace {

void BM_ConnectedCodes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(factorlab::connected_codes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConnectedCodes)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_DeltaCritical(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorlab::enumerate_delta_critical(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DeltaCritical)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
