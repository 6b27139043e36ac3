#pragma once

#include <cstddef>
#include <optional>

#include "graphcvx/metric.hpp"
#include "graphcvx/vertex_function.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx {

// z lies between x and y when d(x,y) = d(x,z) + d(z,y) under the metric's
// tolerance. A pair at infinite distance has nothing between it.
bool between(const Metric& metric, VertexId x, VertexId z, VertexId y);

// One betweenness step: every z lying between two members of `set`.
VertexSet c1(const Metric& metric, const VertexSet& set);

// Least c1-closed superset. Iterates c1 at most |X| times and throws
// std::logic_error if the chain has not stabilised by then.
VertexSet convex_hull(const Metric& metric, const VertexSet& set);

bool is_convex_set(const Metric& metric, const VertexSet& set);

struct BetweennessWitness {
    VertexId x;
    VertexId z;
    VertexId y;
};

// First z outside `set` between two members x < y, scanning z then (x, y) in id order.
std::optional<BetweennessWitness> find_escape(const Metric& metric, const VertexSet& set);

struct ConvexityWitness {
    VertexId x;
    VertexId y;
    double lhs;  // f(z)
    double rhs;  // d(y,z)/d(x,y) f(x) + d(x,z)/d(x,y) f(y)
};

struct ConvexityVerdict {
    bool holds = true;
    std::optional<ConvexityWitness> witness;

    explicit operator bool() const { return holds; }
};

// Checks d(x,y) f(z) <= d(y,z) f(x) + d(x,z) f(y) for every pair x < y with z
// between them. 0 * (+inf) is taken as 0 so that indicators behave. On failure
// the witness is the lexicographically first violating pair.
ConvexityVerdict is_convex_fn_at(const Metric& metric, const VertexFunction& f, VertexId z);

// Same, with x and y restricted to `domain` (convexity on a subset).
ConvexityVerdict is_convex_fn_at(const Metric& metric, const VertexFunction& f, VertexId z,
                                 const VertexSet& domain);

bool is_convex_fn(const Metric& metric, const VertexFunction& f);

// min over y in F of d(x, y); +inf for empty F.
double dist_to_set(const Metric& metric, VertexId x, const VertexSet& set);
VertexFunction distance_function(const Metric& metric, const VertexSet& set);

// 0 on the set, +inf elsewhere.
VertexFunction indicator(const VertexSet& set);

inline constexpr std::size_t kBruteForceHullLimit = 14;

// Intersection of every convex superset of `set`, by enumerating all supersets.
// Throws std::invalid_argument above kBruteForceHullLimit vertices.
VertexSet brute_force_hull_oracle(const Metric& metric, const VertexSet& set);

}  // namespace graphcvx
