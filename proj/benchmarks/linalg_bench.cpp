#include <benchmark/benchmark.h>

#include "distinv/canonical.hpp"
#include "distinv/exact_linalg.hpp"
#include "distinv/spectra.hpp"

namespace {

using namespace distinv;

IntMatrix cycle_ddeg_plus(int n) { return build(graphs::cycle(n), MatrixKind::DdegPlus); }

void BM_Snf(benchmark::State& state) {
  const IntMatrix m = cycle_ddeg_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(32);

void BM_Charpoly(benchmark::State& state) {
  const IntMatrix m = cycle_ddeg_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_Charpoly)->Arg(8)->Arg(16)->Arg(32);

void BM_Jacobi(benchmark::State& state) {
  const IntMatrix m = cycle_ddeg_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(m));
}
BENCHMARK(BM_Jacobi)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = state.range(0) == 0 ? graphs::petersen() : graphs::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certificate(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(16)->Arg(40);

}  // namespace
