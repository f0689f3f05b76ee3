#include <benchmark/benchmark.h>

#include "fracolor/builtins.hpp"
#include "fracolor/construct.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/halfedge.hpp"
#include "fracolor/oracle.hpp"

using namespace fracolor;

static void BM_BuildPower(benchmark::State& state) {
    Graph g = petersen_graph();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FracPowGraph fp(g, 3, n);
        benchmark::DoNotOptimize(fp.power_edge_count());
    }
}
BENCHMARK(BM_BuildPower)->Arg(5)->Arg(9)->Arg(13);

static void BM_MaxClique(benchmark::State& state) {
    FracPowGraph fp(petersen_graph(), 3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CliqueResult r = max_clique(fp);
        benchmark::DoNotOptimize(r.size);
    }
}
BENCHMARK(BM_MaxClique)->Arg(5)->Arg(7);

static void BM_VerifyColoring(benchmark::State& state) {
    Graph g = petersen_graph();
    FracPowGraph fp(g, 4, 6);
    ConstructResult r = color_even_cubic(g, 4, 6);
    for (auto _ : state) {
        auto v = verify_coloring(fp, r.coloring);
        benchmark::DoNotOptimize(v.has_value());
    }
}
BENCHMARK(BM_VerifyColoring);

static void BM_GoodHalfEdge(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) {
        GoodColoringTrace t = good_half_edge_coloring(g);
        benchmark::DoNotOptimize(t.h.h.size());
    }
}
BENCHMARK(BM_GoodHalfEdge);

static void BM_ConstructEvenCubic(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) {
        ConstructResult r = color_even_cubic(g, 4, 6);
        benchmark::DoNotOptimize(r.colors_used);
    }
}
BENCHMARK(BM_ConstructEvenCubic);

BENCHMARK_MAIN();
