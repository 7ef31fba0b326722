#include <random>

#include <benchmark/benchmark.h>

#include "chowkit/chow_x.hpp"
#include "chowkit/chow_y.hpp"
#include "chowkit/lattice.hpp"

using namespace chowkit;

static void BM_QuotientRing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(QuotientRing(static_cast<int>(state.range(0))).total_rank());
}
BENCHMARK(BM_QuotientRing)->DenseRange(8, 24, 4)->Unit(benchmark::kMillisecond);

static void BM_ChowY(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ChowY(static_cast<int>(state.range(0))).rank());
}
BENCHMARK(BM_ChowY)->DenseRange(8, 24, 4)->Unit(benchmark::kMillisecond);

static void BM_Closure(benchmark::State& state) {
  const ChowY c(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_closure(c).closed);
  state.counters["pairs"] = static_cast<double>(c.rank() * (c.rank() + 1) / 2);
}
BENCHMARK(BM_Closure)->Arg(8)->Arg(13)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_ChowX(benchmark::State& state) {
  const ChowY c(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_chow_x(c).matches());
}
BENCHMARK(BM_ChowX)->Arg(8)->Arg(13)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_Tables(benchmark::State& state) {
  const ChowY c(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tables(c).all_hold());
}
BENCHMARK(BM_Tables)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_Snf(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(-50, 50);
  IntMatrix a(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a(r, c) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a).rank);
}
BENCHMARK(BM_Snf)->RangeMultiplier(2)->Range(4, 32);

static void BM_Hnf(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> dist(-50, 50);
  IntMatrix a(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) a(r, c) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(a).rows());
}
BENCHMARK(BM_Hnf)->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
