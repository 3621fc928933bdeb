#include <benchmark/benchmark.h>

#include "kv/rootdata.hpp"
#include "kv/sweep.hpp"
#include "kv/weyl.hpp"

using namespace kv;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_Multiplicity(benchmark::State& state) {
  RootDatum rd = build_root_datum("B2", IsogenySpec::adjoint());
  WeylGroup g(rd);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity_sweep(rd, g, 12, mode(state)));
}

void BM_LowerBound(benchmark::State& state) {
  RootDatum rd = build_root_datum("A3", IsogenySpec::adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_sweep(rd, Rational(8), mode(state)));
}

void BM_Stratification(benchmark::State& state) {
  RootDatum rd = build_root_datum("A2", IsogenySpec::adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(stratification_sweep(rd, 4, Rational(4), mode(state)));
}

void BM_Degenerate(benchmark::State& state) {
  RootDatum rd = build_root_datum("G2");
  WeylGroup g(rd);
  for (auto _ : state) benchmark::DoNotOptimize(degenerate_sweep(rd, g, 200, 1, mode(state)));
}

}  // namespace

BENCHMARK(BM_Multiplicity)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowerBound)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Stratification)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Degenerate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
