#include <benchmark/benchmark.h>

#include "irum/core.hpp"

static void BM_EnumerateMenus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(irum::enumerate_menus(4).size());
  }
}
BENCHMARK(BM_EnumerateMenus);

BENCHMARK_MAIN();
