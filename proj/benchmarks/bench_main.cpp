#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "crossforge/cap_search.hpp"
#include "crossforge/drawing.hpp"
#include "crossforge/layer_count.hpp"
#include "crossforge/lower_bounds.hpp"
#include "crossforge/permutation.hpp"
#include "crossforge/scene.hpp"
#include "crossforge/verify.hpp"

using namespace crossforge;

static void BM_SectorFormula(benchmark::State& state) {
  const auto f = base_permutation(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sector_crossings_formula(f));
}
BENCHMARK(BM_SectorFormula)->RangeMultiplier(2)->Range(8, 1024);

static void BM_SectorBruteforce(benchmark::State& state) {
  const auto f = base_permutation(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sector_crossings_bruteforce(f));
}
BENCHMARK(BM_SectorBruteforce)->DenseRange(8, 32, 8);

static void BM_Inversions(benchmark::State& state) {
  std::vector<int> v(static_cast<std::size_t>(state.range(0)));
  std::iota(v.begin(), v.end(), 0);
  std::mt19937 rng(1);
  std::shuffle(v.begin(), v.end(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(inversion_number(v));
}
BENCHMARK(BM_Inversions)->RangeMultiplier(8)->Range(64, 1 << 18);

static void BM_CapSearch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cap_route_search(m).crossings);
}
BENCHMARK(BM_CapSearch)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_CycleSceneCount(benchmark::State& state) {
  const auto scene = realize_cycle_drawing(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(count_scene_crossings(scene));
}
BENCHMARK(BM_CycleSceneCount)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_Congestion(benchmark::State& state) {
  const auto e = build_embedding_km2m(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(congestion(e).max);
}
BENCHMARK(BM_Congestion)->DenseRange(8, 20, 6)->Unit(benchmark::kMillisecond);

static void BM_VerifyQuick(benchmark::State& state) {
  auto opt = quick_options();
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_sweep(opt).cells.size());
}
BENCHMARK(BM_VerifyQuick)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
