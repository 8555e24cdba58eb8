#include <benchmark/benchmark.h>

#include "ks/automorphism.hpp"
#include "ks/catalog.hpp"
#include "ks/classify.hpp"
#include "ks/coloring.hpp"
#include "ks/generators.hpp"
#include "ks/inequality.hpp"
#include "ks/theta.hpp"

namespace {

const ks::Graph& seven_context() {
  static const ks::Graph g = *ks::builtin_graph("seven-context");
  return g;
}

void BM_ThetaJohnson(benchmark::State& state) {
  const ks::Graph g = ks::johnson_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ks::lovasz_theta(g).value);
  state.SetLabel("n=" + std::to_string(g.n()));
}
BENCHMARK(BM_ThetaJohnson)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ks::chromatic_number(seven_context()));
}
BENCHMARK(BM_ChromaticNumber)->Unit(benchmark::kMillisecond);

void BM_Orbits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ks::automorphism_orbits(seven_context()));
}
BENCHMARK(BM_Orbits)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ks::classify(seven_context()));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_ClassicalMax(benchmark::State& state) {
  const ks::ContextSet cs = ks::builtin_seven_context();
  const ks::ClassicalMaxOptions opts{.workers = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ks::classical_max(cs, opts).max);
}
BENCHMARK(BM_ClassicalMax)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
