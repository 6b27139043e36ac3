#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "graphcvx/convexity.hpp"
#include "graphcvx/families.hpp"
#include "graphcvx/sampling.hpp"
#include "graphcvx/subharmonic.hpp"
#include "graphcvx/theorems.hpp"
#include "test_support.hpp"

namespace graphcvx {
namespace {

GroupSpec window_1d(std::int64_t lo, std::int64_t hi) { return GroupSpec{1, Norm::l1, 1.0, {{lo, hi}}}; }

GroupSpec square(Norm norm, std::int64_t half, double radius = 1.0) {
    return GroupSpec{2, norm, radius, {{-half, half}, {-half, half}}};
}

// True when the pairs cover N(z) exactly once and no pair is an edge.
bool valid_pairing(const Graph& g, VertexId z, const Pairing& pairs) {
    std::vector<VertexId> covered;
    for (auto [u, v] : pairs) {
        if (g.adjacent(u, v) || !g.adjacent(z, u) || !g.adjacent(z, v)) return false;
        covered.push_back(u);
        covered.push_back(v);
    }
    std::sort(covered.begin(), covered.end());
    return std::adjacent_find(covered.begin(), covered.end()) == covered.end() && covered.size() == g.degree(z);
}

TEST(Claims, IdsRoundTrip) {
    ASSERT_EQ(all_claims().size(), 8u);
    for (Claim c : all_claims()) EXPECT_EQ(parse_claim(claim_id(c)), c);
    EXPECT_FALSE(parse_claim("thm9"));
    EXPECT_EQ(claim_id(Claim::thm4_cvx_sub), "thm4-cvx-sub");
}

TEST(ClaimReport, VerdictRules) {
    ClaimReport r;
    EXPECT_EQ(r.verdict(), ClaimVerdict::vacuous);
    r.fired = 3;
    EXPECT_EQ(r.verdict(), ClaimVerdict::verified);
    ClaimReport bad;
    bad.witness = ClaimWitness{{"vertex", std::string("y")}};
    r.merge(bad);
    EXPECT_EQ(r.verdict(), ClaimVerdict::refuted);
}

TEST(Hypotheses, TriangleFree) {
    const auto grid = grid_graph(5, 5);
    EXPECT_TRUE(triangle_free_hypothesis(grid.graph, grid.graph.vertex("(2,2)")));
    const auto tiling = triangular_tiling(5, 5);
    EXPECT_FALSE(triangle_free_hypothesis(tiling.graph, tiling.graph.vertex("(2,2)")));
    EXPECT_FALSE(triangle_free_hypothesis(path_graph(3), 0));
}

TEST(Hypotheses, Pairing) {
    const Graph g = testing::c4();
    const auto c4_pairs = pairing_hypothesis(g, g.vertex("x"));
    ASSERT_TRUE(c4_pairs);
    ASSERT_EQ(c4_pairs->size(), 1u);
    EXPECT_EQ(std::minmax(c4_pairs->front().first, c4_pairs->front().second),
              std::minmax(g.vertex("a"), g.vertex("y")));

    const auto tiling = triangular_tiling(5, 5);
    const VertexId centre = tiling.graph.vertex("(2,2)");
    const auto tri = pairing_hypothesis(tiling.graph, centre);
    ASSERT_TRUE(tri);
    EXPECT_EQ(tri->size(), 3u);
    EXPECT_TRUE(valid_pairing(tiling.graph, centre, *tri));

    const auto grid = grid_graph(5, 5);
    const auto sq = pairing_hypothesis(grid.graph, grid.graph.vertex("(2,2)"));
    ASSERT_TRUE(sq);
    EXPECT_EQ(sq->size(), 2u);

    EXPECT_FALSE(pairing_hypothesis(complete_graph(3), 0));
    EXPECT_FALSE(pairing_hypothesis(path_graph(3), 0));  // odd degree
}

TEST(Hypotheses, PairingAgreesWithBruteForce) {
    // Oracle: try every perfect matching of N(z) by recursion on index lists.
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_connected_graph(8, 0.45, rng);
        for (VertexId z = 0; z < g.vertex_count(); ++z) {
            std::vector<VertexId> nbrs;
            for (const auto& n : g.neighbors(z)) nbrs.push_back(n.vertex);
            std::function<bool(std::vector<VertexId>)> exists = [&](std::vector<VertexId> rest) {
                if (rest.empty()) return true;
                for (std::size_t j = 1; j < rest.size(); ++j) {
                    if (g.adjacent(rest[0], rest[j])) continue;
                    auto next = rest;
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
                    next.erase(next.begin());
                    if (exists(next)) return true;
                }
                return false;
            };
            const bool expected = !nbrs.empty() && nbrs.size() % 2 == 0 && exists(nbrs);
            const auto found = pairing_hypothesis(g, z);
            ASSERT_EQ(found.has_value(), expected);
            if (found) {
                EXPECT_TRUE(valid_pairing(g, z, *found));
            }
        }
    }
}

TEST(Pointwise, LatticeNormFunction) {
    const GroupLattice lat(square(Norm::l1, 4));
    VertexFunction f(lat.vertex_count());
    for (VertexId v = 0; v < lat.vertex_count(); ++v) f.set(v, lat.norm(lat.point(v)));
    const auto at = *lat.vertex_at(Point{1, 0});
    const auto mean = is_subharmonic_at(lat.graph(), f, at, Weighting::edge);
    EXPECT_EQ(mean.neighborhood_mean, 1.5);  // (0 + 2 + 2 + 2) / 4
    const auto report = verify_pointwise_implication(lat, f);
    EXPECT_EQ(report.verdict(), ClaimVerdict::verified);
    EXPECT_EQ(report.checked, 49u);
    EXPECT_EQ(report.fired, 49u);
}

TEST(Pointwise, FourCycleDistanceFunction) {
    const Graph g = testing::c4();
    const ShortestPathMetric m(g);
    const auto f = distance_function(m, VertexSet(4, {g.vertex("a")}));
    const auto report = verify_pointwise_implication(m, f, GraphHypothesis::triangle_free);
    EXPECT_EQ(report.verdict(), ClaimVerdict::verified);
    EXPECT_EQ(report.fired, 3u);  // every vertex except y
    EXPECT_EQ(report.claim, "thm1");
}

TEST(Pointwise, ConstantFunctionsEverywhere) {
    const auto tiling = triangular_tiling(4, 4);
    const ShortestPathMetric m(tiling.graph);
    const VertexFunction f(m.vertex_count(), 1.0);
    EXPECT_EQ(verify_pointwise_implication(m, f, GraphHypothesis::pairing).verdict(), ClaimVerdict::verified);
    const GroupLattice lat(square(Norm::linf, 2));
    EXPECT_EQ(verify_pointwise_implication(lat, VertexFunction(lat.vertex_count(), -2.0)).verdict(),
              ClaimVerdict::verified);
}

TEST(Pointwise, WeightedGraphRejected) {
    const ShortestPathMetric m(parse_graph("e a b 2\n"));
    EXPECT_THROW(verify_pointwise_implication(m, VertexFunction(2), GraphHypothesis::pairing), std::invalid_argument);
}

TEST(DistanceToSet, FourCycleSingletonIsVacuous) {
    const Graph g = testing::c4();
    const ShortestPathMetric m(g);
    EXPECT_EQ(verify_dist_convex_implies_set_convex(m, VertexSet(4, {g.vertex("a")})).verdict(),
              ClaimVerdict::vacuous);
    EXPECT_EQ(verify_dist_convex_implies_set_convex(m, VertexSet::all(4)).verdict(), ClaimVerdict::verified);
    EXPECT_THROW(verify_dist_convex_implies_set_convex(m, VertexSet(4)), std::invalid_argument);
}

TEST(DistanceToSet, IntegerWindow) {
    const GroupLattice lat(window_1d(-4, 4));
    const VertexSet f(9, {*lat.vertex_at(Point{0}), *lat.vertex_at(Point{1})});
    EXPECT_EQ(verify_dist_midpoint_convex_implies_set_convex(lat, f).verdict(), ClaimVerdict::verified);
}

TEST(NearestNeighbor, Examples) {
    const GroupLattice lat(window_1d(-5, 5));
    const auto origin = verify_nn_implies_dist_midpoint_convex(lat, VertexSet(11, {*lat.vertex_at(Point{0})}));
    EXPECT_EQ(origin.verdict(), ClaimVerdict::verified);
    EXPECT_EQ(origin.fired, 9u);
    const VertexSet pair(11, {*lat.vertex_at(Point{-1}), *lat.vertex_at(Point{1})});
    EXPECT_EQ(verify_nn_implies_dist_midpoint_convex(lat, pair).verdict(), ClaimVerdict::vacuous);
    EXPECT_EQ(verify_nn_implies_dist_midpoint_convex(lat, VertexSet::all(11)).verdict(), ClaimVerdict::verified);
}

TEST(DistanceToPoint, EveryAnchorEveryNorm) {
    for (Norm norm : {Norm::l1, Norm::l2, Norm::linf}) {
        const GroupLattice lat(square(norm, 2));
        for (VertexId a = 0; a < lat.vertex_count(); ++a) {
            const auto report = verify_distance_to_point_midpoint_convex(lat, a);
            ASSERT_EQ(report.verdict(), ClaimVerdict::verified) << to_string(norm) << " anchor " << a;
        }
    }
}

TEST(DegreeTwo, CyclesOnlyFire) {
    EXPECT_EQ(degree_two_suite(cycle_graph(5), 0, 1).verdict(), ClaimVerdict::verified);
    EXPECT_EQ(degree_two_suite(cycle_graph(3), 0, 1).verdict(), ClaimVerdict::vacuous);
    EXPECT_EQ(degree_two_suite(path_graph(4), 0, 1).verdict(), ClaimVerdict::vacuous);
}

TEST(Suites, SmallExhaustiveAndSampled) {
    const auto thm1 = exhaustive_graph_suite(GraphHypothesis::triangle_free, 4, 0, 1);
    EXPECT_EQ(thm1.verdict(), ClaimVerdict::verified);
    EXPECT_GT(thm1.fired, 0u);
    const auto thm2 = exhaustive_graph_suite(GraphHypothesis::pairing, 4, 0, 1);
    EXPECT_EQ(thm2.verdict(), ClaimVerdict::verified);

    const auto tiling = triangular_tiling(5, 5);
    EXPECT_EQ(sampled_graph_suite(tiling.graph, GraphHypothesis::pairing, 50, 3).verdict(), ClaimVerdict::verified);
    const auto grid = grid_graph(4, 4);
    EXPECT_EQ(sampled_graph_suite(grid.graph, GraphHypothesis::triangle_free, 50, 3).verdict(),
              ClaimVerdict::verified);
}

TEST(Suites, LatticeSuites) {
    const GroupLattice lat(square(Norm::l2, 3, 1.5));
    EXPECT_EQ(midpoint_subharmonic_suite(lat, 20, 1).verdict(), ClaimVerdict::verified);
    EXPECT_EQ(distance_to_point_suite(lat, 5, 1).verdict(), ClaimVerdict::verified);
}

TEST(Suites, OneDimensionalSweeps) {
    const GroupLattice lat(window_1d(-3, 3));
    const NormMetric m(lat);
    for (const auto& report : {dist_convex_subset_sweep(m), dist_midpoint_subset_sweep(lat),
                               nearest_neighbor_subset_sweep(lat)}) {
        EXPECT_EQ(report.verdict(), ClaimVerdict::verified) << report.claim;
        EXPECT_EQ(report.checked >= 127u, true);
    }
    EXPECT_THROW(dist_convex_subset_sweep(ShortestPathMetric(path_graph(17))), std::invalid_argument);
}

// Theorem-style properties on random graphs: wherever a hypothesis holds and
// f is convex there, f is subharmonic there.
class RandomInstances : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomInstances, PointwiseImplications) {
    std::mt19937_64 rng(GetParam());
    const Graph g = random_connected_graph(9, 0.4, rng);
    const ShortestPathMetric m(g);
    for (int round = 0; round < 40; ++round) {
        const auto f = uniform_function(9, -3, 3, rng);
        for (auto hyp : {GraphHypothesis::triangle_free, GraphHypothesis::pairing}) {
            ASSERT_NE(verify_pointwise_implication(m, f, hyp).verdict(), ClaimVerdict::refuted);
        }
    }
    const Graph tf = random_triangle_free_graph(9, rng);
    EXPECT_EQ(sampled_graph_suite(tf, GraphHypothesis::triangle_free, 40, GetParam()).verdict(),
              ClaimVerdict::verified);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomInstances, ::testing::Range<std::uint64_t>(1, 11));

}  // namespace
}  // namespace graphcvx
