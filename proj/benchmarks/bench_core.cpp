#include <benchmark/benchmark.h>

#include "monodir/mc.hpp"
#include "monodir/riesz.hpp"
#include "monodir/stats.hpp"
#include "monodir/synth.hpp"

namespace {

monodir::RealGrid field(std::size_t n) { return monodir::gen_field_2d(monodir::ShiftedMatern{}, n, {1, 0}); }

void BM_Monogenic(benchmark::State& state) {
  const auto f = field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monodir::monogenic(f));
}
BENCHMARK(BM_Monogenic)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_SpectralCovZero(benchmark::State& state) {
  const auto f = field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monodir::spectral_cov_zero(f));
}
BENCHMARK(BM_SpectralCovZero)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_SynthField2d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t s = 0;
  for (auto _ : state) benchmark::DoNotOptimize(monodir::gen_field_2d(monodir::ShiftedMatern{}, n, {1, s++}));
}
BENCHMARK(BM_SynthField2d)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_SynthUnidirectional(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monodir::gen_unidirectional(monodir::Unidirectional1D{}, n, {1, s++}));
  }
}
BENCHMARK(BM_SynthUnidirectional)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_UHatFast(benchmark::State& state) {
  const auto f = field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monodir::u_hat_fast(f));
}
BENCHMARK(BM_UHatFast)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
