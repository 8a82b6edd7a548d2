#include <benchmark/benchmark.h>

#include "g3enum/g3enum.hpp"

using namespace g3enum;

// Cold: every iteration starts from an empty store.
static void BM_KontsevichCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session s;
    benchmark::DoNotOptimize(kontsevich(s, d));
  }
}
BENCHMARK(BM_KontsevichCold)->DenseRange(5, 20, 5);

static void BM_DescendantCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session s;
    benchmark::DoNotOptimize(desc(s, d, 0, 2, 3 * d - 2));
  }
}
BENCHMARK(BM_DescendantCold)->DenseRange(2, 6, 2);

static void BM_Rt3Cold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session s;
    benchmark::DoNotOptimize(rt(s, {3, d, {}, 3 * d - 4}));
  }
}
BENCHMARK(BM_Rt3Cold)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_N3dCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session s;
    benchmark::DoNotOptimize(n3d(s, d));
  }
}
BENCHMARK(BM_N3dCold)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

static void BM_N3dWarm(benchmark::State& state) {
  Session s;
  n3d(s, 7);
  for (auto _ : state) benchmark::DoNotOptimize(n3d(s, 7));
}
BENCHMARK(BM_N3dWarm);

BENCHMARK_MAIN();
