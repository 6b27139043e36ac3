#include <benchmark/benchmark.h>

#include <random>

#include "graphcvx/graphcvx.hpp"

using namespace graphcvx;

namespace {

void BM_AllPairsDistances(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto grid = grid_graph(n, n);
    for (auto _ : state) {
        const ShortestPathMetric m(grid.graph);
        double total = 0;
        for (VertexId x = 0; x < m.vertex_count(); ++x)
            for (VertexId y = 0; y < m.vertex_count(); ++y) total += m.distance(x, y);
        benchmark::DoNotOptimize(total);
    }
    state.SetComplexityN(static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_ConvexHullGridCorners(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto grid = grid_graph(n, n);
    const ShortestPathMetric m(grid.graph);
    const VertexSet corners(m.vertex_count(), {0, m.vertex_count() - 1});
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(m, corners));
}
BENCHMARK(BM_ConvexHullGridCorners)->RangeMultiplier(2)->Range(4, 16);

void BM_BruteForceHullOracle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ShortestPathMetric m(cycle_graph(n));
    const VertexSet pair(n, {0, n / 2});
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_hull_oracle(m, pair));
}
BENCHMARK(BM_BruteForceHullOracle)->DenseRange(6, 12, 2);

void BM_ConvexFunctionCheck(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ShortestPathMetric m(random_connected_graph(n, 0.2, rng));
    const auto f = uniform_function(n, -3, 3, rng);
    for (auto _ : state) {
        std::size_t convex = 0;
        for (VertexId z = 0; z < n; ++z) convex += static_cast<bool>(is_convex_fn_at(m, f, z));
        benchmark::DoNotOptimize(convex);
    }
}
BENCHMARK(BM_ConvexFunctionCheck)->RangeMultiplier(2)->Range(8, 64);

void BM_ConnectedGraphEnumeration(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ConnectedGraphEnumeration)->DenseRange(4, 6);

void BM_MidpointSuite(benchmark::State& state) {
    const auto half = state.range(0);
    const GroupLattice lat(GroupSpec{2, Norm::l2, 1.5, {{-half, half}, {-half, half}}});
    for (auto _ : state) benchmark::DoNotOptimize(midpoint_subharmonic_suite(lat, 10, 3));
}
BENCHMARK(BM_MidpointSuite)->DenseRange(2, 6, 2);

void BM_NearestNeighbourProperty(benchmark::State& state) {
    const auto half = state.range(0);
    const GroupLattice lat(GroupSpec{1, Norm::l1, 1.0, {{-half, half}}});
    VertexSet interval(lat.vertex_count());
    for (VertexId v = 0; v < lat.vertex_count() / 2; ++v) interval.insert(v);
    for (auto _ : state) benchmark::DoNotOptimize(has_nearest_neighbor_property(lat, interval).holds);
}
BENCHMARK(BM_NearestNeighbourProperty)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
