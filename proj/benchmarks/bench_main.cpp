#include <benchmark/benchmark.h>

#include "jbdet/determinant.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/reduce.hpp"
#include "jbdet/sampling.hpp"
#include "jbdet/spectral.hpp"

using namespace jbdet;

static void BM_CdMultiply(benchmark::State& state) {
  Rng rng(1);
  const int level = static_cast<int>(state.range(0));
  const CDElement x = random_cd(rng, level), y = random_cd(rng, level);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CdMultiply)->DenseRange(1, 5);

static void BM_DtN(benchmark::State& state) {
  Rng rng(2);
  const HermMatrix x = random_herm(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dt_n(x));
}
BENCHMARK(BM_DtN)->DenseRange(1, 6);

static void BM_Dt3Sarrus(benchmark::State& state) {
  Rng rng(3);
  const HermMatrix x = random_herm(rng, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dt3_sarrus(x));
}
BENCHMARK(BM_Dt3Sarrus);

static void BM_SpectralDecompose(benchmark::State& state) {
  Rng rng(4);
  const HermMatrix u = random_unitary(rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(u));
}
BENCHMARK(BM_SpectralDecompose)->Unit(benchmark::kMicrosecond);

static void BM_DtGeneralNormal(benchmark::State& state) {
  Rng rng(5);
  const HermMatrix x = random_normal(rng);
  for (auto _ : state) benchmark::DoNotOptimize(dt_general(x));
}
BENCHMARK(BM_DtGeneralNormal)->Unit(benchmark::kMicrosecond);

static void BM_SimultaneousBiq(benchmark::State& state) {
  Rng rng(6);
  const HermMatrix u = random_unitary(rng);
  const HermMatrix e = random_diagonal_unitary(rng);
  for (auto _ : state) benchmark::DoNotOptimize(simultaneous_biq(u, e));
}
BENCHMARK(BM_SimultaneousBiq)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
