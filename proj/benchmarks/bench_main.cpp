#include <benchmark/benchmark.h>

#include "epc/epc.hpp"

namespace {

epc::Graph cycle(int n) {
    std::vector<epc::Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return epc::Graph::from_edges(n, e);
}

void BM_ShortestHoleGnp(benchmark::State& state) {
    epc::Graph g = epc::gen_gnp(static_cast<int>(state.range(0)), 0.1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(epc::shortest_hole(g));
}
BENCHMARK(BM_ShortestHoleGnp)->Arg(50)->Arg(200)->Arg(800);

void BM_IsChordalGnp(benchmark::State& state) {
    epc::Graph g = epc::gen_gnp(static_cast<int>(state.range(0)), 0.2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(epc::is_chordal(g));
}
BENCHMARK(BM_IsChordalGnp)->Arg(100)->Arg(1000);

// Long bare cycle at production constants: one pass of the core routine.
void BM_SolveLongCycle(benchmark::State& state) {
    epc::Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(epc::epc_solve(g, 1));
}
BENCHMARK(BM_SolveLongCycle)->Arg(9000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_SolveDecorated(benchmark::State& state) {
    epc::LongHoleSpec spec;
    spec.n = static_cast<int>(state.range(0));
    spec.decor = epc::parse_decorations("petal,dom,ear,lollipop,tulip");
    spec.seed = 1;
    epc::Graph g = epc::gen_long_hole(spec).g;
    for (auto _ : state) benchmark::DoNotOptimize(epc::epc_solve(g, 1));
}
BENCHMARK(BM_SolveDecorated)->Arg(9000)->Unit(benchmark::kMillisecond);

void BM_SolveGnp(benchmark::State& state) {
    epc::Graph g = epc::gen_gnp(static_cast<int>(state.range(0)), 0.05, 11);
    for (auto _ : state) benchmark::DoNotOptimize(epc::epc_solve(g, 3));
}
BENCHMARK(BM_SolveGnp)->Arg(60)->Arg(300);

void BM_MengerGrid(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    std::vector<epc::Edge> e;
    epc::VertexSet left, right;
    for (int r = 0; r < side; ++r) {
        left.push_back(r * side);
        right.push_back(r * side + side - 1);
        for (int c = 0; c < side; ++c) {
            int v = r * side + c;
            if (c + 1 < side) e.emplace_back(v, v + 1);
            if (r + 1 < side) e.emplace_back(v, v + side);
        }
    }
    epc::Graph g = epc::Graph::from_edges(side * side, e);
    for (auto _ : state) benchmark::DoNotOptimize(epc::menger(g, left, right));
}
BENCHMARK(BM_MengerGrid)->Arg(10)->Arg(40);

void BM_PackCubic(benchmark::State& state) {
    epc::Graph g = epc::gen_cubic(static_cast<int>(state.range(0)), 9);
    auto edges = g.edges();
    for (auto _ : state) benchmark::DoNotOptimize(epc::pack_cycles_23(edges, 1 << 20));
}
BENCHMARK(BM_PackCubic)->Arg(100)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
