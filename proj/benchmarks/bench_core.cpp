#include <benchmark/benchmark.h>

#include "boxclique/boxes.hpp"
#include "boxclique/canonical.hpp"
#include "boxclique/certificates.hpp"
#include "boxclique/constructions.hpp"
#include "boxclique/families.hpp"
#include "boxclique/graph.hpp"
#include "boxclique/search.hpp"

using namespace boxclique;

static void BM_FindClique(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    MultiColoredGraph g = blowup_four_cycle(k);
    for (auto _ : state) {
        for (int v = 0; v < g.n(); ++v) {
            benchmark::DoNotOptimize(find_clique(g, 0, v, k));
            benchmark::DoNotOptimize(find_clique(g, 1, v, k));
        }
    }
}
BENCHMARK(BM_FindClique)->Arg(3)->Arg(5)->Arg(8);

static void BM_CheckProperty(benchmark::State& state) {
    MultiColoredGraph g = build_tcolor(3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_property(g, 3).holds);
}
BENCHMARK(BM_CheckProperty);

static void BM_EdgeCritical(benchmark::State& state) {
    MultiColoredGraph g = blowup_four_cycle(4);
    for (auto _ : state) benchmark::DoNotOptimize(is_edge_critical(g, 4).critical);
}
BENCHMARK(BM_EdgeCritical);

static void BM_CanonicalForm(benchmark::State& state) {
    MultiColoredGraph g = build_extremal(cycle_pair(3));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

static void BM_Normalize(benchmark::State& state) {
    CoverFamilies f;
    f.n_vertices = 6;
    f.blue = {{0, 1}, {2, 3}, {4, 5}};
    f.red = {{1, 2}, {3, 4}, {0, 5}};
    for (auto _ : state) benchmark::DoNotOptimize(normalize(f, 2).b());
}
BENCHMARK(BM_Normalize);

static void BM_RankCertificate(benchmark::State& state) {
    CoverFamilies f = normalize(extract_witnesses(blowup_four_cycle(4), 4), 4);
    for (auto _ : state) benchmark::DoNotOptimize(prop2_certificate(f).rank);
}
BENCHMARK(BM_RankCertificate);

static void BM_MinGridBoxes(benchmark::State& state) {
    for (auto _ : state) {
        GridSearchResult res = min_grid_boxes(4, 4, 3, true, 8);
        benchmark::DoNotOptimize(res.minimum);
    }
}
BENCHMARK(BM_MinGridBoxes);

static void BM_PiercingNumber(benchmark::State& state) {
    BoxFamily fam = figure1_partition(6, 10, 10);
    for (auto _ : state) benchmark::DoNotOptimize(piercing_number(fam));
}
BENCHMARK(BM_PiercingNumber);

static void BM_MinNontrivialBoxes(benchmark::State& state) {
    DiscreteBox box{{3, 3, 3}};
    for (auto _ : state) {
        BoxSearchResult res = min_nontrivial_boxes(box, 8);
        benchmark::DoNotOptimize(res.minimum);
    }
}
BENCHMARK(BM_MinNontrivialBoxes);

BENCHMARK_MAIN();
