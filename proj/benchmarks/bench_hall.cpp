#include <benchmark/benchmark.h>

#include "cechhom/hall_basis.hpp"
#include "cechhom/whitehead.hpp"

using namespace cechhom;

static void BM_Generate(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int j = static_cast<int>(state.range(1));
    std::size_t words = 0;
    for (auto _ : state) {
        const HallSet set = HallSet::generate(k, j);
        words = set.words().size();
        benchmark::DoNotOptimize(words);
    }
    state.counters["words"] = static_cast<double>(words);
}
BENCHMARK(BM_Generate)->Args({3, 6})->Args({5, 7})->Args({6, 7})->Unit(benchmark::kMillisecond);

static void BM_NecklaceCount(benchmark::State& state) {
    for (auto _ : state)
        for (int j = 1; j <= 60; ++j) benchmark::DoNotOptimize(necklace_count(2, j));
}
BENCHMARK(BM_NecklaceCount);

static void BM_Census(benchmark::State& state) {
    const auto grading = GradingSequence::parse("1,2;3");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(height_class_census(n, grading));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_HallNormalize(benchmark::State& state) {
    const LetterDegrees degrees({2, 2, 3}, 2);
    const auto e = BracketExpr::parse("[a1 + a2, [a2 - a1, a3]] + [[a3, a1], a2] + [a3, [a2, a1]]");
    for (auto _ : state) benchmark::DoNotOptimize(hall_normalize(expand(e, degrees), 3));
}
BENCHMARK(BM_HallNormalize);
