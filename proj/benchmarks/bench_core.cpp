#include <benchmark/benchmark.h>

#include "shiftcode/graphtransfer.hpp"
#include "shiftcode/rankcode.hpp"
#include "shiftcode/sampling.hpp"
#include "shiftcode/tableaux.hpp"

namespace sc = shiftcode;

static void BM_Encode(benchmark::State& state) {
  const auto x = sc::sample_prefix(sc::Law::uniform, state.range(0), 17);
  for (auto _ : state) benchmark::DoNotOptimize(sc::encode(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Encode)->Range(1 << 10, 1 << 20);

static void BM_Transfer(benchmark::State& state) {
  const auto t = sc::encode(sc::sample_prefix(sc::Law::uniform, state.range(0), 19));
  for (auto _ : state) benchmark::DoNotOptimize(sc::transfer(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Transfer)->Range(1 << 10, 1 << 20);

static void BM_Rsk(benchmark::State& state) {
  const auto x = sc::sample_prefix(sc::Law::uniform, state.range(0), 23);
  for (auto _ : state) benchmark::DoNotOptimize(sc::rsk(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Rsk)->Range(1 << 6, 1 << 14);

static void BM_JdtPromotion(benchmark::State& state) {
  const auto q = sc::rsk(sc::sample_prefix(sc::Law::uniform, state.range(0), 29)).q;
  for (auto _ : state) benchmark::DoNotOptimize(sc::jdt_promotion(q));
}
BENCHMARK(BM_JdtPromotion)->Range(1 << 6, 1 << 12);

static void BM_ReconstructFirst(benchmark::State& state) {
  const auto t = sc::encode(sc::sample_prefix(sc::Law::uniform, state.range(0), 31));
  for (auto _ : state) benchmark::DoNotOptimize(sc::reconstruct_first(t));
}
BENCHMARK(BM_ReconstructFirst)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
