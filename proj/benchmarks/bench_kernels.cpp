#include <benchmark/benchmark.h>

#include "scmorph/random.hpp"
#include "scmorph/scmorph.hpp"

namespace {

using namespace scmorph;

ImageGrid noise_image(std::size_t side, std::uint64_t seed) {
  ImageGrid g{side, side, 255, std::vector<Value>(side * side)};
  random::Rng rng(seed);
  std::uniform_int_distribution<Value> px(0, 255);
  for (auto& p : g.pixels) p = px(rng);
  return g;
}

void BM_DeltaUpVerticesToEdges(benchmark::State& state) {
  auto g = noise_image(state.range(0), 1);
  auto x = dim_slice(binary_complex_from_image(g, 128), 0);
  for (auto _ : state) benchmark::DoNotOptimize(delta_up(0, 1, x));
  state.SetItemsProcessed(state.iterations() * x.ambient().size(1));
}
BENCHMARK(BM_DeltaUpVerticesToEdges)->Arg(64)->Arg(256);

void BM_EpsilonDownTrianglesToVertices(benchmark::State& state) {
  auto g = noise_image(state.range(0), 2);
  auto x = dim_slice(binary_complex_from_image(g, 64), 2);
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_down(2, 0, x));
  state.SetItemsProcessed(state.iterations() * x.ambient().size(0));
}
BENCHMARK(BM_EpsilonDownTrianglesToVertices)->Arg(64)->Arg(256);

void BM_BinaryFilter(benchmark::State& state) {
  auto g = noise_image(state.range(0), 3);
  auto x = binary_complex_from_image(g, 100);
  const FilterSpec spec{static_cast<FilterKind>(state.range(1)), 2, Variant::Up};
  for (auto _ : state) benchmark::DoNotOptimize(apply_filter(spec, x));
  state.SetLabel(spec.to_string());
}
BENCHMARK(BM_BinaryFilter)
    ->ArgsProduct({{64, 256},
                   {static_cast<int>(FilterKind::Open), static_cast<int>(FilterKind::Close),
                    static_cast<int>(FilterKind::Asf)}})
    ->Unit(benchmark::kMicrosecond);

void BM_GrayFilter(benchmark::State& state) {
  auto m = stack_from_image(noise_image(state.range(0), 4));
  const FilterSpec spec{FilterKind::Asf, static_cast<int>(state.range(1)), Variant::Up};
  for (auto _ : state) benchmark::DoNotOptimize(gray_filter(spec, m));
}
BENCHMARK(BM_GrayFilter)->ArgsProduct({{64, 128}, {1, 3}})->Unit(benchmark::kMillisecond);

void BM_ImageStructure(benchmark::State& state) {
  const std::size_t side = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(complex_from_image_structure(side, side));
}
BENCHMARK(BM_ImageStructure)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
