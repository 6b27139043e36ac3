#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "graphcvx/graph.hpp"
#include "graphcvx/subharmonic.hpp"
#include "graphcvx/vertex_function.hpp"

namespace graphcvx {

enum class GraphFamily {
    cycle,          // C_size
    path,           // P_size
    complete,       // K_size (K2 is the single edge)
    grid,           // size x size square grid
    tri_tiling,     // size x size triangular-lattice window
    random,         // connected G(size, p), fresh per graph
    triangle_free,  // random connected triangle-free, min degree 2, on size vertices
    connected,      // every connected graph on <= size vertices, up to isomorphism
};

enum class FunctionSampler {
    uniform,     // random integers in [value_min, value_max]
    distance,    // d(., a) for every vertex a
    indicator,   // indicators of random vertex sets
    constant,    // the zero function
    exhaustive,  // every function into {value_min, ..., value_max}
};

// Which vertices count. A counterexample at a vertex outside the filter is
// not reported.
enum class HypothesisFilter { none, triangle_free, pairing, either };

std::optional<GraphFamily> parse_family(std::string_view text);
std::optional<FunctionSampler> parse_sampler(std::string_view text);
std::optional<HypothesisFilter> parse_filter(std::string_view text);

struct SearchSpec {
    GraphFamily family = GraphFamily::random;
    std::size_t size = 6;
    double edge_probability = 0.5;
    FunctionSampler sampler = FunctionSampler::uniform;
    int value_min = -3;
    int value_max = 3;
    // Draws per graph for the random samplers.
    std::size_t samples_per_graph = 32;
    HypothesisFilter filter = HypothesisFilter::none;
    std::uint64_t seed = 1;
};

// f convex at `vertex` under the unit graph metric but not subharmonic there.
struct Counterexample {
    Graph graph;
    VertexFunction function;
    VertexId vertex = 0;
    MeanComparison mean;
};

struct SearchResult {
    std::size_t instances = 0;  // (graph, function) pairs examined
    std::optional<Counterexample> witness;
};

// Walks the family's graphs in a fixed order and, per graph, the sampler's
// functions, stopping at the first counterexample or after `budget`
// instances. Deterministic for a given spec. Finite families combined with a
// finite sampler may end before the budget is spent.
SearchResult search_counterexample(const SearchSpec& spec, std::size_t budget);

}  // namespace graphcvx
