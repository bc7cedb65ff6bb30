#include <benchmark/benchmark.h>

#include "hnk/autsearch.hpp"

using namespace hnk;

static void BM_StabilizerSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const HGraph g(GraphParams{n, k});
    SearchOptions opts;
    opts.verify_each = false;  // isolate the search itself
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizer_of_empty(g, opts).order());
    }
}
BENCHMARK(BM_StabilizerSearch)->Args({4, 1})->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_StabilizerSearchComponent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HGraph g(GraphParams{n, 2, Component::even});
    SearchOptions opts;
    opts.verify_each = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizer_of_empty(g, opts).order());
    }
}
BENCHMARK(BM_StabilizerSearchComponent)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_DecomposeKnown(benchmark::State& state) {
    const HGraph g(GraphParams{5, 3});
    const StabilizerResult stab = stabilizer_of_empty(g);
    for (auto _ : state) {
        std::size_t known = 0;
        for (std::size_t i = 0; i < stab.order(); ++i) {
            if (decompose_known(stab.element(i), g)) ++known;
        }
        benchmark::DoNotOptimize(known);
    }
    state.SetItemsProcessed(state.iterations() * stab.order());
}
BENCHMARK(BM_DecomposeKnown)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
