#include <benchmark/benchmark.h>

#include "naks/kakeya.hpp"
#include "naks/lipschitz.hpp"
#include "naks/montecarlo.hpp"
#include "naks/theory.hpp"

using namespace naks;

namespace {

std::shared_ptr<const ProjectiveSpace> space_for(const benchmark::State& state) {
  return ProjectiveSpace::create(Ring::make(Family::padic, 2, static_cast<std::uint32_t>(state.range(1))),
                                 static_cast<std::uint32_t>(state.range(0)));
}

void BM_RandomMap(benchmark::State& state) {
  const auto space = space_for(state);
  LipschitzMap f = LipschitzMap::zero(space);
  std::uint64_t i = 0;
  for (auto _ : state) {
    random_lipschitz_into(SampleStream(1, i++), f);
    benchmark::DoNotOptimize(f.values().data());
  }
}
BENCHMARK(BM_RandomMap)->Args({2, 5})->Args({2, 10})->Args({3, 3})->Args({3, 6});

void BM_BuildSet(benchmark::State& state) {
  const auto space = space_for(state);
  KakeyaBuilder builder(space);
  const auto f = random_lipschitz(space, SampleStream(2, 0));
  for (auto _ : state) benchmark::DoNotOptimize(builder.build(f));
}
BENCHMARK(BM_BuildSet)->Args({2, 5})->Args({2, 10})->Args({3, 3})->Args({3, 6});

void BM_SampleCards(benchmark::State& state) {
  const auto space = space_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(sample_cards(space, 3, 1000, 1));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SampleCards)->Args({2, 5})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_ExpectedMeasure(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expected_measure(2, 2, n));
}
BENCHMARK(BM_ExpectedMeasure)->Arg(8)->Arg(12)->Arg(16);

void BM_HeightSum(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_height_sum(3, 3, n, true));
}
BENCHMARK(BM_HeightSum)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
