#include <benchmark/benchmark.h>

#include "signrmt/census.hpp"
#include "signrmt/crossing_stats.hpp"
#include "signrmt/spectra.hpp"
#include "signrmt/theory.hpp"

using namespace signrmt;

static void BM_Census(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crossing_census(k, kDefaultEnumerationCap, 1));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(to_double(double_factorial(2 * k - 1))));
}
BENCHMARK(BM_Census)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_Summarize(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  StreamRng rng(1, 0);
  std::vector<int> labels, partner;
  sample_uniform_pairing(k, rng, labels, partner);
  Classifier classifier;
  for (auto _ : state) benchmark::DoNotOptimize(classifier.summarize(partner));
}
BENCHMARK(BM_Summarize)->RangeMultiplier(4)->Range(8, 512);

static void BM_MonteCarloCrossing(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_crossing(k, 10000, 3, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarloCrossing)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Eigenvalues(benchmark::State& state) {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::PalindromicToeplitz;
  spec.dimension = static_cast<std::size_t>(state.range(0));
  spec.p = 0.75;
  const auto a = simulation_sample(spec, 0);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

static void BM_ToeplitzVolume(benchmark::State& state) {
  const auto c = Pairing::from_edges(3, {{0, 3}, {1, 4}, {2, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_x(c, 100000, 1, 1));
}
BENCHMARK(BM_ToeplitzVolume)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
