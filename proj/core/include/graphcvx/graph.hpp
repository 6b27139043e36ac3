#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphcvx {

using VertexId = std::size_t;

struct Neighbor {
    VertexId vertex;
    double weight;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
    VertexId u;
    VertexId v;
    double weight;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite undirected graph with strictly positive edge weights. Vertices are
// indexed densely in insertion order and carry a whitespace-free name.
class Graph {
public:
    Graph() = default;

    // Vertices named "0" .. "n-1".
    explicit Graph(std::size_t vertex_count);

    // Throws GraphError on a duplicate or malformed name.
    VertexId add_vertex(std::string name);
    VertexId ensure_vertex(std::string_view name);

    // Throws GraphError on self-loops, duplicate edges and non-positive weights.
    void add_edge(VertexId u, VertexId v, double weight = 1.0);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::optional<VertexId> find(std::string_view name) const;
    // Throws GraphError naming the id when it is unknown.
    VertexId vertex(std::string_view name) const;
    const std::string& name(VertexId v) const;

    // Sorted by neighbor id.
    std::span<const Neighbor> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::optional<double> edge_weight(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return edge_weight(u, v).has_value(); }

    // True iff two neighbors of z are adjacent to each other.
    bool in_triangle(VertexId z) const;

    bool has_unit_weights() const { return unit_weights_; }
    bool is_connected() const;
    std::size_t min_degree() const;

    // Each undirected edge once, with u < v, ordered by (u, v).
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::string> names_;
    std::map<std::string, VertexId, std::less<>> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t edge_count_ = 0;
    bool unit_weights_ = true;
};

}  // namespace graphcvx
