#include <benchmark/benchmark.h>

#include <omp.h>

#include "loopchar/localization.hpp"

namespace {

void BM_SerialGallerySum(benchmark::State& state) {
  const auto w = loopchar::chain_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(loopchar::serial::b_coeffs(w));
  state.SetComplexityN(state.range(0));
}

void BM_OpenMPGallerySum(benchmark::State& state) {
  const auto w = loopchar::chain_word(static_cast<std::size_t>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(loopchar::b_coeffs(w));
  state.counters["threads"] = static_cast<double>(state.range(1));
}

}  // namespace

BENCHMARK(BM_SerialGallerySum)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMPGallerySum)
    ->ArgsProduct({{6, 8, 10, 12}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
