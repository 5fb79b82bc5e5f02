// Ball construction: queue-based reference vs level-synchronous OpenMP, and the
// brute-force catalog on top of it.
#include <benchmark/benchmark.h>

#include "wngt/ball.hpp"
#include "wngt/catalog.hpp"

using namespace wngt;

static System sys_of(int64_t code) {
  switch (code) {
    case 0: return make_system(Family::B, 3);
    case 1: return make_system(Family::C, 3);
    default: return make_system(Family::D, 4);
  }
}

static void BM_BallSerial(benchmark::State& st) {
  System s = sys_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ball_serial(s, int(st.range(1))).size());
}

static void BM_BallParallel(benchmark::State& st) {
  System s = sys_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ball_parallel(s, int(st.range(1))).size());
}

static void BM_BruteCatalog(benchmark::State& st) {
  System s = sys_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(brute_enumerate(s, int(st.range(1))).size());
}

BENCHMARK(BM_BallSerial)->Args({0, 14})->Args({1, 14})->Args({2, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallParallel)->Args({0, 14})->Args({1, 14})->Args({2, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteCatalog)->Args({0, 14})->Args({2, 12})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
