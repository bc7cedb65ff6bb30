#include <benchmark/benchmark.h>

#include <random>

#include "hnk/symmetry.hpp"

using namespace hnk;

static void BM_ExtendedActionSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const Permutation sigma = random_permutation(n + 1, rng);
    for (auto _ : state) {
        std::uint32_t acc = 0;
        for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
            acc ^= apply_extended_a(sigma, Subset(n, x)).bits();
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (1 << n));
}
BENCHMARK(BM_ExtendedActionSweep)->Arg(7)->Arg(11)->Arg(15);

static void BM_VerifyAutomorphism(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const HGraph g(GraphParams{n, k});
    std::mt19937_64 rng(2);
    const SymmetryElement e(Subset(n, static_cast<std::uint32_t>(rng() % (1u << n))),
                            random_permutation(n + 1, rng), Family::extended_a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_automorphism(e, g).ok);
    }
}
BENCHMARK(BM_VerifyAutomorphism)->Args({5, 3})->Args({7, 4});

static void BM_StructuredCompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    const SymmetryElement a(Subset(n, 5u), random_permutation(n + 1, rng), Family::extended_a);
    const SymmetryElement b(Subset(n, 9u), random_permutation(n + 1, rng), Family::extended_a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(a, b));
    }
}
BENCHMARK(BM_StructuredCompose)->Arg(7)->Arg(15);
