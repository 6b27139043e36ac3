#include "graphcvx/subharmonic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graphcvx {

namespace {

void require_degree(const Graph& graph, const VertexFunction& f, VertexId x) {
    if (f.size() != graph.vertex_count()) throw std::invalid_argument("function size does not match the graph");
    if (graph.degree(x) == 0) throw std::domain_error("degree zero at vertex '" + graph.name(x) + "'");
}

double weight_of(const Neighbor& n, Weighting weighting) { return weighting == Weighting::unit ? 1.0 : n.weight; }

}  // namespace

double laplacian(const Graph& graph, const VertexFunction& f, VertexId x, Weighting weighting) {
    require_degree(graph, f, x);
    double sum = 0.0;
    for (const auto& n : graph.neighbors(x)) {
        if (std::isinf(f(n.vertex))) return kInfinity;
        sum += weight_of(n, weighting) * (f(n.vertex) - f(x));
    }
    return sum;  // -inf when f(x) = +inf
}

MeanComparison compare_with_neighbors(const Graph& graph, const VertexFunction& f, VertexId x, Weighting weighting,
                                      Tolerance tolerance) {
    require_degree(graph, f, x);
    double total = 0.0;
    double weighted_sum = 0.0;
    for (const auto& n : graph.neighbors(x)) {
        const double w = weight_of(n, weighting);
        total += w;
        weighted_sum += w * f(n.vertex);
    }
    MeanComparison out;
    out.vertex = x;
    out.f_value = f(x);
    out.total_weight = total;
    out.neighborhood_mean = weighted_sum / total;
    // Compare M_x f(x) with sum e f(y) so unit-weight integer data stays exact.
    const double lhs = total * f(x);
    if (tolerance.equal(lhs, weighted_sum)) {
        out.verdict = MeanVerdict::harmonic;
    } else if (tolerance.less_equal(lhs, weighted_sum)) {
        out.verdict = MeanVerdict::subharmonic;
    } else {
        out.verdict = MeanVerdict::neither;
    }
    return out;
}

}  // namespace graphcvx
