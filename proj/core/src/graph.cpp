#include "graphcvx/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

namespace graphcvx {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Graph::Graph(std::size_t vertex_count) {
    for (std::size_t i = 0; i < vertex_count; ++i) add_vertex(std::to_string(i));
}

VertexId Graph::add_vertex(std::string name) {
    if (!valid_name(name)) throw GraphError("invalid vertex id '" + name + "'");
    if (index_.contains(name)) throw GraphError("duplicate vertex '" + name + "'");
    const VertexId id = names_.size();
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    adjacency_.emplace_back();
    return id;
}

VertexId Graph::ensure_vertex(std::string_view name) {
    if (auto id = find(name)) return *id;
    return add_vertex(std::string(name));
}

void Graph::add_edge(VertexId u, VertexId v, double weight) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex '" + names_[u] + "'");
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw GraphError("edge " + names_[u] + " -- " + names_[v] + " needs a positive finite weight");
    }
    if (adjacent(u, v)) throw GraphError("duplicate edge " + names_[u] + " -- " + names_[v]);

    auto insert_sorted = [](std::vector<Neighbor>& list, Neighbor n) {
        auto pos = std::lower_bound(list.begin(), list.end(), n.vertex,
                                    [](const Neighbor& a, VertexId id) { return a.vertex < id; });
        list.insert(pos, n);
    };
    insert_sorted(adjacency_[u], {v, weight});
    insert_sorted(adjacency_[v], {u, weight});
    ++edge_count_;
    if (weight != 1.0) unit_weights_ = false;
}

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw GraphError("unknown vertex '" + std::string(name) + "'");
}

const std::string& Graph::name(VertexId v) const {
    check_vertex(v);
    return names_[v];
}

std::span<const Neighbor> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::optional<double> Graph::edge_weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[u];
    auto pos = std::lower_bound(list.begin(), list.end(), v,
                                [](const Neighbor& a, VertexId id) { return a.vertex < id; });
    if (pos == list.end() || pos->vertex != v) return std::nullopt;
    return pos->weight;
}

bool Graph::in_triangle(VertexId z) const {
    const auto nbrs = neighbors(z);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (adjacent(nbrs[i].vertex, nbrs[j].vertex)) return true;
        }
    }
    return false;
}

bool Graph::is_connected() const {
    if (names_.empty()) return true;
    std::vector<char> seen(names_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const auto& n : adjacency_[v]) {
            if (!seen[n.vertex]) {
                seen[n.vertex] = 1;
                ++reached;
                stack.push_back(n.vertex);
            }
        }
    }
    return reached == names_.size();
}

std::size_t Graph::min_degree() const {
    std::size_t result = 0;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        result = v == 0 ? adjacency_[v].size() : std::min(result, adjacency_[v].size());
    }
    return result;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (const auto& n : adjacency_[u]) {
            if (u < n.vertex) out.push_back({u, n.vertex, n.weight});
        }
    }
    return out;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= names_.size()) {
        throw GraphError("vertex index " + std::to_string(v) + " out of range (graph has " +
                         std::to_string(names_.size()) + " vertices)");
    }
}

}  // namespace graphcvx
