#include "graphcvx/metric.hpp"

#include <functional>
#include <mutex>
#include <queue>
#include <utility>
#include <vector>

namespace graphcvx {

namespace {

std::vector<double> dijkstra(const Graph& graph, VertexId source) {
    std::vector<double> dist(graph.vertex_count(), kInfinity);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (d > dist[v]) continue;
        for (const auto& n : graph.neighbors(v)) {
            const double candidate = d + n.weight;
            if (candidate < dist[n.vertex]) {
                dist[n.vertex] = candidate;
                queue.emplace(candidate, n.vertex);
            }
        }
    }
    return dist;
}

}  // namespace

struct ShortestPathMetric::Cache {
    explicit Cache(std::size_t n) : rows(n), filled(std::make_unique<std::once_flag[]>(n)) {}

    std::vector<std::vector<double>> rows;
    std::unique_ptr<std::once_flag[]> filled;
};

ShortestPathMetric::ShortestPathMetric(std::shared_ptr<const Graph> graph, Tolerance tolerance)
    : Metric(tolerance), graph_(std::move(graph)) {
    if (!graph_) throw GraphError("shortest-path metric needs a graph");
    cache_ = std::make_shared<Cache>(graph_->vertex_count());
}

ShortestPathMetric::ShortestPathMetric(Graph graph, Tolerance tolerance)
    : ShortestPathMetric(std::make_shared<const Graph>(std::move(graph)), tolerance) {}

std::span<const double> ShortestPathMetric::distances_from(VertexId source) const {
    graph_->neighbors(source);  // range check
    std::call_once(cache_->filled[source], [&] { cache_->rows[source] = dijkstra(*graph_, source); });
    return cache_->rows[source];
}

double ShortestPathMetric::distance(VertexId x, VertexId y) const {
    graph_->neighbors(y);
    return distances_from(x)[y];
}

double distance(const Graph& graph, VertexId x, VertexId y) {
    graph.neighbors(y);
    graph.neighbors(x);
    return dijkstra(graph, x)[y];
}

}  // namespace graphcvx
