#include <benchmark/benchmark.h>

#include "hnk/hgraph.hpp"

using namespace hnk;

static void BM_BuildGraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        HGraph g(GraphParams{n, k});
        benchmark::DoNotOptimize(g.vertex_count());
    }
}
BENCHMARK(BM_BuildGraph)->Args({8, 3})->Args({12, 5})->Args({16, 7});

static void BM_BfsEccentricity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const HGraph g(GraphParams{n, k});
    for (auto _ : state) {
        benchmark::DoNotOptimize(bfs_distances(g, g.base_vertex()));
    }
}
BENCHMARK(BM_BfsEccentricity)->Args({10, 3})->Args({12, 5})->Args({14, 5});

static void BM_Diameter(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const HGraph g(GraphParams{n, k});
    for (auto _ : state) {
        benchmark::DoNotOptimize(diameter(g));
    }
}
BENCHMARK(BM_Diameter)->Args({12, 3})->Args({12, 5});

static void BM_NeighborSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const HGraph g(GraphParams{n, k});
    for (auto _ : state) {
        std::size_t total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.neighbors(v).size();
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * g.vertex_count());
}
BENCHMARK(BM_NeighborSweep)->Args({10, 5})->Args({12, 6});
