#include <benchmark/benchmark.h>

#include "tripv/canonical.hpp"
#include "tripv/families.hpp"
#include "tripv/lie.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/triangulation.hpp"

using namespace tripv;

namespace {

void BM_GBasisChain(benchmark::State& state) {
    const auto p = cubic_of(make({Family::Chain, static_cast<std::size_t>(state.range(0))}));
    for (auto _ : state) benchmark::DoNotOptimize(g_basis(p));
}
BENCHMARK(BM_GBasisChain)->DenseRange(3, 8);

void BM_GBasisDaisy(benchmark::State& state) {
    const auto p = cubic_of(make({Family::Daisy, static_cast<std::size_t>(state.range(0))}));
    for (auto _ : state) benchmark::DoNotOptimize(g_basis(p));
}
BENCHMARK(BM_GBasisDaisy)->DenseRange(2, 5);

void BM_RankTestCircular(benchmark::State& state) {
    const auto b = g_basis(cubic_of(make({Family::Circular, static_cast<std::size_t>(state.range(0))})));
    for (auto _ : state) benchmark::DoNotOptimize(is_prehomogeneous(b));
}
BENCHMARK(BM_RankTestCircular)->DenseRange(5, 9, 2);

// the NotPV path draws every sample
void BM_RankTestDisjoint(benchmark::State& state) {
    const auto u = disjoint_union(make({Family::Chain, 3}), make({Family::Circular, 5}));
    const auto b = g_basis(cubic_of(u));
    for (auto _ : state) benchmark::DoNotOptimize(is_prehomogeneous(b));
}
BENCHMARK(BM_RankTestDisjoint);

void BM_CanonicalForm(benchmark::State& state) {
    const auto classes = dihedral_classes(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& t : classes) benchmark::DoNotOptimize(canonical_form(reduce(t).result));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(classes.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(8, 11);

void BM_Enumerate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_triangulations(n, [&](const PolygonTriangulation&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate)->DenseRange(8, 12, 2);

void BM_Classify(benchmark::State& state) {
    ClassifyConfig cfg;
    cfg.check_soundness = false;
    for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<std::size_t>(state.range(0)), cfg));
}
BENCHMARK(BM_Classify)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
