#include "graphcvx/families.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace graphcvx {

namespace {

std::string coord(std::size_t x, std::size_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

using Offset = std::pair<int, int>;

// Window of a translation-invariant planar graph given by its "forward" offsets.
GraphWindow planar_window(std::size_t width, std::size_t height, std::span<const Offset> forward) {
    if (width == 0 || height == 0) throw std::invalid_argument("window sizes must be positive");
    GraphWindow out;
    for (std::size_t x = 0; x < width; ++x) {
        for (std::size_t y = 0; y < height; ++y) out.graph.add_vertex(coord(x, y));
    }
    auto id = [&](long x, long y) -> std::optional<VertexId> {
        if (x < 0 || y < 0 || x >= static_cast<long>(width) || y >= static_cast<long>(height)) return std::nullopt;
        return static_cast<VertexId>(x) * height + static_cast<VertexId>(y);
    };
    out.interior = VertexSet(width * height);
    for (std::size_t x = 0; x < width; ++x) {
        for (std::size_t y = 0; y < height; ++y) {
            const VertexId v = *id(static_cast<long>(x), static_cast<long>(y));
            bool interior = true;
            for (const auto& [dx, dy] : forward) {
                const auto ahead = id(static_cast<long>(x) + dx, static_cast<long>(y) + dy);
                const auto behind = id(static_cast<long>(x) - dx, static_cast<long>(y) - dy);
                if (ahead) out.graph.add_edge(v, *ahead);
                interior = interior && ahead && behind;
            }
            if (interior) out.interior.insert(v);
        }
    }
    return out;
}

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Bit index of the unordered pair {i, j}, i < j.
std::size_t pair_bit(std::size_t i, std::size_t j, std::size_t n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

bool mask_connected(std::uint32_t mask, std::size_t n) {
    std::uint32_t seen = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!((mask >> pair_bit(i, j, n)) & 1U)) continue;
                const bool hi = (seen >> i) & 1U;
                const bool hj = (seen >> j) & 1U;
                if (hi != hj) {
                    seen |= (1U << i) | (1U << j);
                    grew = true;
                }
            }
        }
    }
    return seen == (1U << n) - 1;
}

// Smallest relabelled mask over the labellings that list vertices by
// non-increasing degree; isomorphic graphs share this value.
std::uint32_t canonical_mask(std::uint32_t mask, std::size_t n) {
    std::array<std::size_t, kMaxExhaustiveVertices> degree{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((mask >> pair_bit(i, j, n)) & 1U) {
                ++degree[i];
                ++degree[j];
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        bool sorted = true;
        for (std::size_t k = 0; k + 1 < n && sorted; ++k) sorted = degree[order[k]] >= degree[order[k + 1]];
        if (!sorted) continue;
        std::uint32_t relabelled = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                const auto i = std::min(order[a], order[b]);
                const auto j = std::max(order[a], order[b]);
                if ((mask >> pair_bit(i, j, n)) & 1U) relabelled |= 1U << pair_bit(a, b, n);
            }
        }
        best = std::min(best, relabelled);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

Graph from_mask(std::uint32_t mask, std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((mask >> pair_bit(i, j, n)) & 1U) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace

Graph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path needs at least one vertex");
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

GraphWindow grid_graph(std::size_t width, std::size_t height) {
    static constexpr std::array<Offset, 2> forward{{{1, 0}, {0, 1}}};
    return planar_window(width, height, forward);
}

GraphWindow king_graph(std::size_t width, std::size_t height) {
    static constexpr std::array<Offset, 4> forward{{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};
    return planar_window(width, height, forward);
}

GraphWindow triangular_tiling(std::size_t width, std::size_t height) {
    static constexpr std::array<Offset, 3> forward{{{1, 0}, {0, 1}, {-1, 1}}};
    return planar_window(width, height, forward);
}

std::vector<Graph> connected_graphs(std::size_t n) {
    if (n == 0 || n > kMaxExhaustiveVertices) {
        throw std::invalid_argument("exhaustive enumeration supports 1.." + std::to_string(kMaxExhaustiveVertices) +
                                    " vertices");
    }
    const std::size_t bits = pair_count(n);
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
        if (!mask_connected(mask, n)) continue;
        seen.insert(canonical_mask(mask, n));
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto mask : seen) out.push_back(from_mask(mask, n));
    return out;
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_vertices) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        auto batch = connected_graphs(n);
        std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
    return out;
}

Graph random_connected_graph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("random graph needs at least one vertex");
    if (!(edge_probability > 0.0) || edge_probability > 1.0) {
        throw std::invalid_argument("edge probability must lie in (0, 1]");
    }
    std::bernoulli_distribution coin(edge_probability);
    while (true) {
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(rng)) g.add_edge(i, j);
            }
        }
        if (g.is_connected()) return g;
    }
}

Graph random_triangle_free_graph(std::size_t n, std::mt19937_64& rng) {
    if (n < 4) throw std::invalid_argument("triangle-free graphs with minimum degree 2 need at least 4 vertices");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    while (true) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        Graph g(n);
        for (const auto& [u, v] : pairs) {
            const auto nu = g.neighbors(u);
            const bool closes_triangle =
                std::any_of(nu.begin(), nu.end(), [&](const Neighbor& w) { return g.adjacent(w.vertex, v); });
            if (!closes_triangle) g.add_edge(u, v);
        }
        if (g.is_connected() && g.min_degree() >= 2) return g;
    }
}

}  // namespace graphcvx
