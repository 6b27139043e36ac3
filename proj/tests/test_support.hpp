#pragma once

// Test-only oracles. They deliberately avoid the library's metric, closure and
// check routines so that the tests compare two independent computations.

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "graphcvx/graph.hpp"
#include "graphcvx/graph_io.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx::testing {

// The 4-cycle a ~ x ~ y ~ z ~ a.
inline Graph c4() { return parse_graph("e a x\ne x y\ne y z\ne z a\n"); }

using Matrix = std::vector<std::vector<double>>;

// All-pairs distances by Floyd-Warshall over the edge list.
inline Matrix floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const double inf = std::numeric_limits<double>::infinity();
    Matrix d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.weight);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Shortest distance by enumerating every simple path (tiny graphs only).
inline double path_enumeration_distance(const Graph& g, VertexId from, VertexId to) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<char> on_path(g.vertex_count(), 0);
    std::function<void(VertexId, double)> walk = [&](VertexId v, double length) {
        if (v == to) {
            best = std::min(best, length);
            return;
        }
        on_path[v] = 1;
        for (const auto& n : g.neighbors(v)) {
            if (!on_path[n.vertex]) walk(n.vertex, length + n.weight);
        }
        on_path[v] = 0;
    };
    walk(from, 0.0);
    return best;
}

// Betweenness closure straight from the definition on a distance matrix:
// add every z with d(x,y) = d(x,z) + d(z,y) for x, y in the set, repeat.
inline std::vector<char> closure_by_definition(const Matrix& d, std::vector<char> in) {
    const std::size_t n = d.size();
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t z = 0; z < n; ++z) {
            if (in[z]) continue;
            for (std::size_t x = 0; x < n && !in[z]; ++x)
                for (std::size_t y = 0; y < n && !in[z]; ++y)
                    if (in[x] && in[y] && d[x][y] < std::numeric_limits<double>::infinity() &&
                        d[x][y] == d[x][z] + d[z][y]) {
                        in[z] = 1;
                        grew = true;
                    }
        }
    }
    return in;
}

inline std::vector<char> as_flags(const VertexSet& s) {
    std::vector<char> out(s.universe(), 0);
    for (auto v : s.members()) out[v] = 1;
    return out;
}

}  // namespace graphcvx::testing
