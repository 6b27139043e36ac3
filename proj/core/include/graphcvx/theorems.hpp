#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "graphcvx/graph.hpp"
#include "graphcvx/group_lattice.hpp"
#include "graphcvx/metric.hpp"
#include "graphcvx/vertex_function.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx {

// The verifiable claims. Ids are the CLI spellings.
enum class Claim {
    thm1,           // triangle-free, deg > 1: convex at z => subharmonic at z
    thm2,           // neighbours pair up non-adjacently: convex at z => subharmonic at z
    thm3,           // d(., F) convex => F convex (graph metric)
    thm4_cvx_sub,   // midpoint convex => weighted subharmonic (lattices)
    lem_deg2,       // 2-regular, triangle-free: convex <=> subharmonic
    lem_dist_pt,    // ||. - a|| is midpoint convex
    prop_dist_cvx,  // d(., F) midpoint convex => F convex (lattices)
    prop_nn,        // F convex with the nearest-neighbour property => d(., F) midpoint convex
};

std::string_view claim_id(Claim claim);
std::optional<Claim> parse_claim(std::string_view id);
std::span<const Claim> all_claims();

enum class ClaimVerdict { verified, vacuous, refuted };
std::string_view to_string(ClaimVerdict verdict);

using WitnessValue = std::variant<std::string, double>;
using ClaimWitness = std::vector<std::pair<std::string, WitnessValue>>;

// Outcome of checking one claim over one or more instances. `fired` counts the
// places where the hypothesis held, so the conclusion was actually tested.
struct ClaimReport {
    std::string claim;
    std::string instance;
    std::size_t checked = 0;
    std::size_t fired = 0;
    std::optional<ClaimWitness> witness;

    // refuted if a witness exists, vacuous if nothing fired, else verified.
    ClaimVerdict verdict() const;

    // Sums the counts and keeps the first witness.
    void merge(const ClaimReport& other);
};

bool triangle_free_hypothesis(const Graph& graph, VertexId z);

using Pairing = std::vector<std::pair<VertexId, VertexId>>;

// Perfect matching of N(z) into non-adjacent pairs, found by backtracking.
// nullopt when deg(z) is odd or zero, or no such matching exists.
std::optional<Pairing> pairing_hypothesis(const Graph& graph, VertexId z);

enum class GraphHypothesis { triangle_free, pairing };

// At every vertex where the hypothesis holds and f is convex (graph metric),
// checks unweighted subharmonicity. Requires unit edge weights.
ClaimReport verify_pointwise_implication(const ShortestPathMetric& metric, const VertexFunction& f,
                                         GraphHypothesis hypothesis);

// At every interior vertex where f is midpoint convex, checks weighted
// subharmonicity.
ClaimReport verify_pointwise_implication(const GroupLattice& lattice, const VertexFunction& f);

// If d(., F) is convex at every vertex under `metric`, checks that F is convex.
// Witness vertices are named from `names` when given, else by index.
ClaimReport verify_dist_convex_implies_set_convex(const Metric& metric, const VertexSet& set,
                                                  const Graph* names = nullptr);

// If d(., F) is midpoint convex at every window vertex, checks that F is
// convex under the norm metric.
ClaimReport verify_dist_midpoint_convex_implies_set_convex(const GroupLattice& lattice, const VertexSet& set);

// If F is norm-convex with the nearest-neighbour property, checks that d(., F)
// is midpoint convex and weighted subharmonic at every interior vertex.
ClaimReport verify_nn_implies_dist_midpoint_convex(const GroupLattice& lattice, const VertexSet& set);

// ||. - a|| passes the midpoint check at every window vertex.
ClaimReport verify_distance_to_point_midpoint_convex(const GroupLattice& lattice, VertexId anchor);

// On a connected 2-regular triangle-free graph, f is convex everywhere iff it
// is unweighted subharmonic everywhere. Vacuous on other graphs. The
// vertex-by-vertex form only holds on C4 and C5: from C6 on, convexity at z
// also constrains pairs at distance 3 that the neighbour mean never sees.
ClaimReport verify_degree_two_equivalence(const ShortestPathMetric& metric, const VertexFunction& f);

// --- suites over many instances ---

// Every connected graph on <= max_vertices vertices (up to isomorphism) and
// every function into {lo, ..., hi}.
ClaimReport exhaustive_graph_suite(GraphHypothesis hypothesis, std::size_t max_vertices, int lo, int hi);

// One graph, sampled functions: uniform values in [-3, 3], d(., a) for every a,
// and indicators of random sets.
ClaimReport sampled_graph_suite(const Graph& graph, GraphHypothesis hypothesis, std::size_t samples,
                                std::uint64_t seed);

// `samples` max-of-affine functions.
ClaimReport midpoint_subharmonic_suite(const GroupLattice& lattice, std::size_t samples, std::uint64_t seed);

// `samples` uniformly drawn anchors a.
ClaimReport distance_to_point_suite(const GroupLattice& lattice, std::size_t samples, std::uint64_t seed);

// All functions into {lo, ..., hi}.
ClaimReport degree_two_suite(const Graph& graph, int lo, int hi);

inline constexpr std::size_t kMaxSweepVertices = 16;

// Every nonempty subset F of the vertices (at most kMaxSweepVertices).
ClaimReport dist_convex_subset_sweep(const Metric& metric, const Graph* names = nullptr);
ClaimReport dist_midpoint_subset_sweep(const GroupLattice& lattice);
ClaimReport nearest_neighbor_subset_sweep(const GroupLattice& lattice);

}  // namespace graphcvx
