#include <benchmark/benchmark.h>

#include "distinv/census.hpp"
#include "distinv/generators.hpp"

namespace {

using namespace distinv;

void BM_GenerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const auto corpus = generate_connected_graphs(static_cast<int>(state.range(0)));
  CensusOptions o;
  o.kinds = {MatrixKind::Atr, MatrixKind::AtrPlus, MatrixKind::Ddeg, MatrixKind::DdegPlus};
  for (auto _ : state) benchmark::DoNotOptimize(run_census(corpus, o));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TreeCensus(benchmark::State& state) {
  CensusOptions o;
  o.kinds = {MatrixKind::DdegPlus};
  o.modes = {FingerprintMode::Invariant};
  for (auto _ : state) benchmark::DoNotOptimize(tree_census(static_cast<int>(state.range(0)), o));
}
BENCHMARK(BM_TreeCensus)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
