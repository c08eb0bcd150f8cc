#include <benchmark/benchmark.h>

#include "arcperm/arc_families.hpp"
#include "arcperm/arc_graph.hpp"
#include "arcperm/characters.hpp"
#include "arcperm/patterns.hpp"
#include "arcperm/weak_order.hpp"

using namespace arcperm;

static void BM_GenerateArcFamily(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_family(n, Family::A));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GenerateArcFamily)->DenseRange(8, 14, 2);

static void BM_ArcPatternFilter(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto group = symmetric_group(n);
    for (auto _ : state) {
        int count = 0;
        for (const Permutation& p : group)
            if (avoids_all(p, arc_patterns())) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ArcPatternFilter)->DenseRange(6, 8);

static void BM_PsiRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto arcs = generate_family(n, Family::A);
    for (auto _ : state)
        for (const Permutation& p : arcs) benchmark::DoNotOptimize(psi_decode(psi_encode(p)));
}
BENCHMARK(BM_PsiRoundTrip)->DenseRange(8, 12, 2);

static void BM_GeodesicCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ArcGraph g = build_arc_graph(n);
    const int e = g.index_of(Permutation::identity(n));
    const int w0 = g.index_of(Permutation::longest(n));
    for (auto _ : state) benchmark::DoNotOptimize(geodesic_count(g, e, w0));
}
BENCHMARK(BM_GeodesicCount)->DenseRange(6, 9);

static void BM_MaximalChains(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FinitePoset poset = build_weak_hasse(n, Ground::U);
    const int lo = poset.index_of(Permutation::identity(n).to_wire());
    const int hi = poset.index_of(Permutation::longest(n).to_wire());
    for (auto _ : state) benchmark::DoNotOptimize(count_maximal_chains(poset, lo, hi));
}
BENCHMARK(BM_MaximalChains)->DenseRange(6, 9);

static void BM_CharacterTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mus = partitions_of(n);
    for (auto _ : state) {
        long long sum = 0;
        for (const Partition& lambda : mus)
            for (const Partition& mu : mus)
                sum += mn_character(Shape{lambda.parts, false}, mu);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_CharacterTable)->DenseRange(7, 9);

BENCHMARK_MAIN();
