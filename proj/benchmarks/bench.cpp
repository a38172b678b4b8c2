#include <benchmark/benchmark.h>

#include "sgc/compiler.hpp"
#include "sgc/graph.hpp"
#include "sgc/oracle.hpp"
#include "sgc/search.hpp"
#include "sgc/signed_state.hpp"

#include <random>

namespace {

using namespace sgc;

Graph random_graph(Vertex n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

void bm_pivot(benchmark::State& state) {
    const Vertex n = static_cast<Vertex>(state.range(0));
    Graph g = random_graph(n, 0.3, 1);
    const auto edges = g.edges();
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [u, v] = edges[i++ % edges.size()];
        benchmark::DoNotOptimize(pivot(g, u, v));
    }
}
BENCHMARK(bm_pivot)->Arg(64)->Arg(256)->Arg(1024);

void bm_canonical_hash(benchmark::State& state) {
    Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_hash(g));
}
BENCHMARK(bm_canonical_hash)->Arg(6)->Arg(8)->Arg(10);

void bm_build_graph_state(benchmark::State& state) {
    Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(build_graph_state(g));
}
BENCHMARK(bm_build_graph_state)->Arg(8)->Arg(12)->Arg(16);

void bm_compile(benchmark::State& state) {
    Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(compile_graph(g));
}
BENCHMARK(bm_compile)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_replay_grid(benchmark::State& state) {
    // replay cost of a compiled certificate, grid rebuilt outside the loop
    Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.5, 5);
    GridCompilation comp = compile_graph(g);
    SignedGraphState grid{generate(GridKind::Triangular, comp.grid.rows, comp.grid.cols),
                         VertexSet{}};
    for (auto _ : state) {
        OutcomeSource src = OutcomeSource::zero();
        benchmark::DoNotOptimize(
            replay_plan(grid, comp.grid.x_set, comp.grid.z_set, src));
    }
}
BENCHMARK(bm_replay_grid)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void bm_pivot_orbit(benchmark::State& state) {
    Graph g = random_graph(static_cast<Vertex>(state.range(0)), 0.5, 6);
    for (auto _ : state) benchmark::DoNotOptimize(pivot_orbit(g, 5000));
}
BENCHMARK(bm_pivot_orbit)->Arg(5)->Arg(6)->Arg(7);

} // namespace

BENCHMARK_MAIN();
