#include <benchmark/benchmark.h>

#include "evasion/finite_game.hpp"
#include "evasion/graphs.hpp"
#include "evasion/match.hpp"

using namespace evasion;

static void BM_SolveG2(benchmark::State& state) {
    FiniteGame g = make_bipartite_subgame(2);
    for (auto _ : state) benchmark::DoNotOptimize(solve(g).positions_explored);
}
BENCHMARK(BM_SolveG2);

static void BM_MaxMatching(benchmark::State& state) {
    std::uint64_t s = 99;
    auto rnd = [&] {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        return z ^ (z >> 31);
    };
    std::vector<Edge> edges;
    int n = static_cast<int>(state.range(0));
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (rnd() % 100 < 20) edges.push_back({u, v});
    for (auto _ : state) benchmark::DoNotOptimize(max_matching_size(edges));
}
BENCHMARK(BM_MaxMatching)->Arg(20)->Arg(40);

static void BM_ConnectedMatch(benchmark::State& state) {
    for (auto _ : state) {
        auto seeker = make_seeker_random(7);
        auto hider = make_hider_connected();
        MatchConfig cfg;
        cfg.turns = static_cast<int>(state.range(0));
        benchmark::DoNotOptimize(run_match(*seeker, *hider, cfg).turns_played);
    }
}
BENCHMARK(BM_ConnectedMatch)->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
