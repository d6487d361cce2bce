#include <benchmark/benchmark.h>

#include "cechhom/cech_elements.hpp"
#include "cechhom/hilton_milnor.hpp"

using namespace cechhom;

static void BM_EarringFormula(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(earring_formula(n, 2, SphereGroupTable::seed()));
}
BENCHMARK(BM_EarringFormula)->Arg(4)->Arg(8);

static void BM_CechDecompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cech_decompose(n, GradingSequence::constant(1), SphereGroupTable::seed()));
}
BENCHMARK(BM_CechDecompose)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ProjectEdge(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto f = f_alpha(EpsilonOracle::band(3, 2), 2);
    for (auto _ : state) benchmark::DoNotOptimize(project_level(f, k, 3, SphereGroupTable::seed()));
}
BENCHMARK(BM_ProjectEdge)->Arg(6)->Arg(24);

static void BM_CheckCoherence(benchmark::State& state) {
    const auto e = CoherentElement::weight2_family(2, EpsilonOracle::band(2, 1));
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_coherence(e, kmax).passed);
}
BENCHMARK(BM_CheckCoherence)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
