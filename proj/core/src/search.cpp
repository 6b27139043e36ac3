#include "graphcvx/search.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "graphcvx/convexity.hpp"
#include "graphcvx/families.hpp"
#include "graphcvx/sampling.hpp"
#include "graphcvx/theorems.hpp"

namespace graphcvx {

namespace {

bool is_random_sampler(FunctionSampler s) { return s == FunctionSampler::uniform || s == FunctionSampler::indicator; }

std::vector<Graph> fixed_family(const SearchSpec& spec) {
    switch (spec.family) {
        case GraphFamily::cycle: return {cycle_graph(spec.size)};
        case GraphFamily::path: return {path_graph(spec.size)};
        case GraphFamily::complete: return {complete_graph(spec.size)};
        case GraphFamily::grid: return {grid_graph(spec.size, spec.size).graph};
        case GraphFamily::tri_tiling: return {triangular_tiling(spec.size, spec.size).graph};
        case GraphFamily::connected: return connected_graphs_up_to(spec.size);
        case GraphFamily::random:
        case GraphFamily::triangle_free: break;
    }
    return {};
}

bool passes_filter(const Graph& graph, VertexId z, HypothesisFilter filter) {
    switch (filter) {
        case HypothesisFilter::none: return true;
        case HypothesisFilter::triangle_free: return triangle_free_hypothesis(graph, z);
        case HypothesisFilter::pairing: return pairing_hypothesis(graph, z).has_value();
        case HypothesisFilter::either:
            return triangle_free_hypothesis(graph, z) || pairing_hypothesis(graph, z).has_value();
    }
    return false;
}

// Calls visit for each function of the sampler until it returns false.
void for_each_sample(const SearchSpec& spec, const ShortestPathMetric& metric, std::mt19937_64& rng,
                     const std::function<bool(const VertexFunction&)>& visit) {
    const std::size_t n = metric.vertex_count();
    switch (spec.sampler) {
        case FunctionSampler::uniform:
            for (std::size_t i = 0; i < spec.samples_per_graph; ++i) {
                if (!visit(uniform_function(n, spec.value_min, spec.value_max, rng))) return;
            }
            return;
        case FunctionSampler::indicator:
            for (std::size_t i = 0; i < spec.samples_per_graph; ++i) {
                if (!visit(indicator(random_vertex_set(n, rng)))) return;
            }
            return;
        case FunctionSampler::distance:
            for (VertexId a = 0; a < n; ++a) {
                if (!visit(distance_function(metric, VertexSet(n, {a})))) return;
            }
            return;
        case FunctionSampler::constant:
            visit(VertexFunction(n, 0.0));
            return;
        case FunctionSampler::exhaustive: {
            if (spec.value_min > spec.value_max) throw std::invalid_argument("empty value range");
            std::vector<double> values(n, spec.value_min);
            while (true) {
                if (!visit(VertexFunction(values))) return;
                std::size_t i = n;
                while (true) {
                    if (i == 0) return;
                    --i;
                    if (values[i] < spec.value_max) {
                        values[i] += 1;
                        break;
                    }
                    values[i] = spec.value_min;
                }
            }
        }
    }
}

}  // namespace

std::optional<GraphFamily> parse_family(std::string_view text) {
    if (text == "cycle") return GraphFamily::cycle;
    if (text == "path") return GraphFamily::path;
    if (text == "complete") return GraphFamily::complete;
    if (text == "grid") return GraphFamily::grid;
    if (text == "tri-tiling") return GraphFamily::tri_tiling;
    if (text == "random") return GraphFamily::random;
    if (text == "triangle-free") return GraphFamily::triangle_free;
    if (text == "connected") return GraphFamily::connected;
    return std::nullopt;
}

std::optional<FunctionSampler> parse_sampler(std::string_view text) {
    if (text == "uniform") return FunctionSampler::uniform;
    if (text == "distance") return FunctionSampler::distance;
    if (text == "indicator") return FunctionSampler::indicator;
    if (text == "constant") return FunctionSampler::constant;
    if (text == "exhaustive") return FunctionSampler::exhaustive;
    return std::nullopt;
}

std::optional<HypothesisFilter> parse_filter(std::string_view text) {
    if (text == "none") return HypothesisFilter::none;
    if (text == "triangle-free") return HypothesisFilter::triangle_free;
    if (text == "pairing") return HypothesisFilter::pairing;
    if (text == "either") return HypothesisFilter::either;
    return std::nullopt;
}

SearchResult search_counterexample(const SearchSpec& spec, std::size_t budget) {
    std::mt19937_64 rng(spec.seed);
    const bool random_graphs = spec.family == GraphFamily::random || spec.family == GraphFamily::triangle_free;
    const std::vector<Graph> fixed = random_graphs ? std::vector<Graph>{} : fixed_family(spec);
    std::size_t next_fixed = 0;

    SearchResult result;
    while (result.instances < budget && !result.witness) {
        Graph graph;
        if (spec.family == GraphFamily::random) {
            graph = random_connected_graph(spec.size, spec.edge_probability, rng);
        } else if (spec.family == GraphFamily::triangle_free) {
            graph = random_triangle_free_graph(spec.size, rng);
        } else {
            if (next_fixed == fixed.size()) {
                // A fixed family only repeats when the sampler draws fresh functions.
                if (!is_random_sampler(spec.sampler) || fixed.empty()) break;
                next_fixed = 0;
            }
            graph = fixed[next_fixed++];
        }

        const ShortestPathMetric metric(graph);
        std::vector<VertexId> targets;
        for (VertexId z = 0; z < graph.vertex_count(); ++z) {
            if (graph.degree(z) > 0 && passes_filter(graph, z, spec.filter)) targets.push_back(z);
        }

        for_each_sample(spec, metric, rng, [&](const VertexFunction& f) {
            ++result.instances;
            for (VertexId z : targets) {
                if (!is_convex_fn_at(metric, f, z)) continue;
                const auto mean = compare_with_neighbors(graph, f, z, Weighting::unit, metric.tolerance());
                if (!mean.subharmonic()) {
                    result.witness = Counterexample{graph, f, z, mean};
                    return false;
                }
            }
            return result.instances < budget;
        });
    }
    return result;
}

}  // namespace graphcvx
