#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "graphcvx/graph.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx {

// A finite window of an infinite graph, with the vertices whose full
// neighbourhood survived the truncation.
struct GraphWindow {
    Graph graph;
    VertexSet interior;
};

// Vertices "0".."n-1".
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph complete_graph(std::size_t n);

// Vertices "(x,y)" with 0 <= x < width, 0 <= y < height, x most significant.
GraphWindow grid_graph(std::size_t width, std::size_t height);
GraphWindow king_graph(std::size_t width, std::size_t height);
// Parallelogram window of the triangular lattice in axial coordinates:
// (i,j) ~ (i+1,j), (i,j+1), (i-1,j+1).
GraphWindow triangular_tiling(std::size_t width, std::size_t height);

inline constexpr std::size_t kMaxExhaustiveVertices = 6;

// One representative per isomorphism class of connected graphs on exactly n
// vertices, each in canonical labelling. n <= kMaxExhaustiveVertices.
std::vector<Graph> connected_graphs(std::size_t n);
std::vector<Graph> connected_graphs_up_to(std::size_t max_vertices);

// Erdos-Renyi G(n, p), resampled until connected.
Graph random_connected_graph(std::size_t n, double edge_probability, std::mt19937_64& rng);

// Random maximal triangle-free graph (edges added in random order when they
// close no triangle), resampled until connected with minimum degree >= 2.
Graph random_triangle_free_graph(std::size_t n, std::mt19937_64& rng);

}  // namespace graphcvx
