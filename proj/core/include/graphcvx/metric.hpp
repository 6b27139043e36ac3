#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "graphcvx/extended_real.hpp"
#include "graphcvx/graph.hpp"

namespace graphcvx {

enum class MetricKind { shortest_path, norm_induced };

// Distance oracle over the vertex ids 0..vertex_count()-1 of some graph.
// Implementations are immutable and safe to query from several threads.
class Metric {
public:
    virtual ~Metric() = default;

    virtual double distance(VertexId x, VertexId y) const = 0;
    virtual std::size_t vertex_count() const = 0;
    virtual MetricKind kind() const = 0;

    const Tolerance& tolerance() const { return tolerance_; }

protected:
    explicit Metric(Tolerance tolerance) : tolerance_(tolerance) {}
    Metric(const Metric&) = default;
    Metric& operator=(const Metric&) = default;

private:
    Tolerance tolerance_;
};

// Weighted shortest-path metric. Rows are filled lazily, one Dijkstra run per
// source, and each row is computed exactly once even under concurrent access.
// Unreachable pairs are at distance +inf.
class ShortestPathMetric final : public Metric {
public:
    explicit ShortestPathMetric(std::shared_ptr<const Graph> graph, Tolerance tolerance = {});
    explicit ShortestPathMetric(Graph graph, Tolerance tolerance = {});

    double distance(VertexId x, VertexId y) const override;
    std::size_t vertex_count() const override { return graph_->vertex_count(); }
    MetricKind kind() const override { return MetricKind::shortest_path; }

    std::span<const double> distances_from(VertexId source) const;
    const Graph& graph() const { return *graph_; }

private:
    struct Cache;

    std::shared_ptr<const Graph> graph_;
    std::shared_ptr<Cache> cache_;
};

// One-off single-pair shortest-path distance.
double distance(const Graph& graph, VertexId x, VertexId y);

}  // namespace graphcvx
