#pragma once

#include "graphcvx/extended_real.hpp"
#include "graphcvx/graph.hpp"
#include "graphcvx/vertex_function.hpp"

namespace graphcvx {

// unit: every edge counts 1, so the normaliser is deg(x).
// edge: edges count their weight, normaliser M_x = sum of incident weights.
enum class Weighting { unit, edge };

enum class MeanVerdict { harmonic, subharmonic, neither };

struct MeanComparison {
    VertexId vertex = 0;
    double f_value = 0.0;
    double neighborhood_mean = 0.0;
    double total_weight = 0.0;
    MeanVerdict verdict = MeanVerdict::harmonic;

    bool subharmonic() const { return verdict != MeanVerdict::neither; }
    bool harmonic() const { return verdict == MeanVerdict::harmonic; }
    explicit operator bool() const { return subharmonic(); }
};

// sum over neighbours of e(x,y) (f(y) - f(x)). Any +inf neighbour gives +inf;
// otherwise f(x) = +inf gives -inf. Throws std::domain_error at degree zero.
double laplacian(const Graph& graph, const VertexFunction& f, VertexId x, Weighting weighting = Weighting::edge);

// Compares f(x) with the weighted neighbourhood mean. Throws std::domain_error
// at isolated vertices.
MeanComparison compare_with_neighbors(const Graph& graph, const VertexFunction& f, VertexId x,
                                      Weighting weighting = Weighting::edge, Tolerance tolerance = {});

inline MeanComparison is_subharmonic_at(const Graph& graph, const VertexFunction& f, VertexId x,
                                        Weighting weighting = Weighting::edge, Tolerance tolerance = {}) {
    return compare_with_neighbors(graph, f, x, weighting, tolerance);
}

inline bool is_harmonic_at(const Graph& graph, const VertexFunction& f, VertexId x,
                           Weighting weighting = Weighting::edge, Tolerance tolerance = {}) {
    return compare_with_neighbors(graph, f, x, weighting, tolerance).harmonic();
}

}  // namespace graphcvx
