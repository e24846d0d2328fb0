#include <benchmark/benchmark.h>

#include <caproute/dense.hpp>
#include <caproute/density.hpp>
#include <caproute/loaded_graph.hpp>
#include <caproute/measure.hpp>
#include <caproute/routing.hpp>
#include <caproute/sim.hpp>

#include <random>

namespace {

using namespace caproute;

// G(n, p) with a fixed seed per (n, p) so repeated runs see the same graph.
Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((gen() >> 11) * 0x1.0p-53 < p) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

LoadedGraph scenario(Topology topo, int nodes, double edge_param, std::uint64_t seed) {
    ScenarioConfig cfg;
    cfg.topology = topo;
    cfg.nodes = nodes;
    cfg.edge_param = edge_param;
    cfg.seed = seed;
    return generate_scenario(cfg);
}

void bm_core_decomposition(benchmark::State& state) {
    auto g = random_graph(static_cast<int>(state.range(0)), 0.1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(core_decomposition(g));
}
BENCHMARK(bm_core_decomposition)->Arg(100)->Arg(400)->Arg(1600);

void bm_edge_connectivity(benchmark::State& state) {
    auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(g));
}
BENCHMARK(bm_edge_connectivity)->Arg(30)->Arg(60)->Arg(120);

void bm_densest_subgraph(benchmark::State& state) {
    auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 13);
    for (auto _ : state) benchmark::DoNotOptimize(densest_subgraph(g));
}
BENCHMARK(bm_densest_subgraph)->Arg(50)->Arg(100)->Arg(200);

void bm_dense_cover_mindeg(benchmark::State& state) {
    auto g = random_graph(static_cast<int>(state.range(0)), 0.1, 17);
    auto m = make_leaf(MeasureKind::MinDegree);
    for (auto _ : state) benchmark::DoNotOptimize(dense_cover(g, *m, Rational(3)));
}
BENCHMARK(bm_dense_cover_mindeg)->Arg(100)->Arg(400)->Arg(1600);

void bm_dense_cover_conn(benchmark::State& state) {
    auto g = random_graph(static_cast<int>(state.range(0)), 0.2, 19);
    auto m = make_leaf(MeasureKind::EdgeConnectivity);
    for (auto _ : state) benchmark::DoNotOptimize(dense_cover(g, *m, Rational(3)));
}
BENCHMARK(bm_dense_cover_conn)->Arg(30)->Arg(60)->Arg(120);

void bm_dense_cover_min_tree(benchmark::State& state) {
    auto g = random_graph(static_cast<int>(state.range(0)), 0.25, 23);
    auto m = parse_measure("min(mindeg,conn)");
    for (auto _ : state) benchmark::DoNotOptimize(dense_cover(g, *m, Rational(2)));
}
BENCHMARK(bm_dense_cover_min_tree)->Arg(30)->Arg(60)->Arg(120);

void bm_route_barbell(benchmark::State& state) {
    auto g = scenario(Topology::Barbell, static_cast<int>(state.range(0)),
                      static_cast<double>(state.range(0)) / 3, 29);
    auto m = make_leaf(MeasureKind::MinDegree);
    NodeId s = g.graph.node_count() - 2;
    NodeId t = g.graph.node_count() - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(route_with_density_index(g, 0.7, *m, Rational(2), s, t));
}
BENCHMARK(bm_route_barbell)->Arg(60)->Arg(240)->Arg(960);

void bm_route_random(benchmark::State& state) {
    auto g = scenario(Topology::RandomUniform, static_cast<int>(state.range(0)), 0.05, 31);
    auto m = make_leaf(MeasureKind::MinDegree);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            route_with_density_index(g, 0.7, *m, Rational(3), 0, g.graph.node_count() - 1));
}
BENCHMARK(bm_route_random)->Arg(100)->Arg(400)->Arg(1600);

void bm_congested_core(benchmark::State& state) {
    auto g = scenario(Topology::RandomUniform, static_cast<int>(state.range(0)), 0.1, 37);
    for (auto _ : state) benchmark::DoNotOptimize(congested_core(g, 0.7));
}
BENCHMARK(bm_congested_core)->Arg(100)->Arg(400)->Arg(1600);

}  // namespace

BENCHMARK_MAIN();
