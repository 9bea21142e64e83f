#include <benchmark/benchmark.h>

#include "hypertrees/forest.hpp"
#include "hypertrees/mosaic.hpp"
#include "hypertrees/probability.hpp"
#include "hypertrees/recurrence.hpp"

using namespace hypertrees;

static void BM_LayerCounts(benchmark::State& state) {
  const SchlafliSymbol pq(4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(layer_counts(pq, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LayerCounts)->Arg(10)->Arg(100)->Arg(1000);

static void BM_SpectralConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectral_constants(SchlafliSymbol(4, 5)));
}
BENCHMARK(BM_SpectralConstants);

static void BM_ClosedForm(benchmark::State& state) {
  const auto consts = spectral_constants(SchlafliSymbol(5, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_count(consts, static_cast<std::size_t>(state.range(0)), Sequence::AB));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(10)->Arg(200);

static void BM_RatioError100(benchmark::State& state) {
  const auto consts = spectral_constants(SchlafliSymbol(4, 5), 150);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_error(consts, 100, Sequence::AB).to_decimal(150));
}
BENCHMARK(BM_RatioError100);

static void BM_AsymptoticDistribution(benchmark::State& state) {
  const auto consts = spectral_constants(SchlafliSymbol(4, 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asymptotic_distribution(consts, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_AsymptoticDistribution)->Arg(10)->Arg(40);

static void BM_BuildMosaic(benchmark::State& state) {
  const SchlafliSymbol pq(4, 5);
  std::size_t vertices = 0;
  for (auto _ : state) {
    const Mosaic m = build(pq, static_cast<std::size_t>(state.range(0)));
    vertices = m.vertex_count();
    benchmark::DoNotOptimize(vertices);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
  state.counters["vertices/s"] =
      benchmark::Counter(static_cast<double>(vertices), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_BuildMosaic)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_GrowForest(benchmark::State& state) {
  const auto levels = static_cast<std::size_t>(state.range(0));
  const Mosaic m = build(SchlafliSymbol(4, 5), levels);
  for (auto _ : state) benchmark::DoNotOptimize(grow(m, levels));
}
BENCHMARK(BM_GrowForest)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Validate(benchmark::State& state) {
  const Mosaic m = build(SchlafliSymbol(5, 5), 4);
  for (auto _ : state) benchmark::DoNotOptimize(validate(m));
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
