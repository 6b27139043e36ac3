#include "graphcvx/convexity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphcvx {

namespace {

void check_universe(const Metric& metric, const VertexSet& set) {
    if (set.universe() != metric.vertex_count()) {
        throw std::invalid_argument("vertex set universe does not match the metric");
    }
}

void check_function(const Metric& metric, const VertexFunction& f) {
    if (f.size() != metric.vertex_count()) throw std::invalid_argument("function size does not match the metric");
}

bool between_with(const Metric& metric, double dxy, VertexId x, VertexId z, VertexId y) {
    if (!std::isfinite(dxy)) return false;
    return metric.tolerance().equal(dxy, metric.distance(x, z) + metric.distance(z, y));
}

ConvexityVerdict convex_at(const Metric& metric, const VertexFunction& f, VertexId z, const VertexSet* domain) {
    check_function(metric, f);
    const std::size_t n = metric.vertex_count();
    const Tolerance& tol = metric.tolerance();
    const double fz = f(z);
    for (VertexId x = 0; x < n; ++x) {
        if (domain && !domain->contains(x)) continue;
        for (VertexId y = x + 1; y < n; ++y) {
            if (domain && !domain->contains(y)) continue;
            const double dxy = metric.distance(x, y);
            if (!(dxy > 0.0) || !between_with(metric, dxy, x, z, y)) continue;
            const double dxz = metric.distance(x, z);
            const double dyz = metric.distance(y, z);
            const double lhs = scale(dxy, fz);
            const double rhs = scale(dyz, f(x)) + scale(dxz, f(y));
            if (!tol.less_equal(lhs, rhs)) {
                const double mean = scale(dyz / dxy, f(x)) + scale(dxz / dxy, f(y));
                return {false, ConvexityWitness{x, y, fz, mean}};
            }
        }
    }
    return {};
}

}  // namespace

bool between(const Metric& metric, VertexId x, VertexId z, VertexId y) {
    return between_with(metric, metric.distance(x, y), x, z, y);
}

VertexSet c1(const Metric& metric, const VertexSet& set) {
    check_universe(metric, set);
    const auto members = set.members();
    VertexSet out(set.universe());
    for (VertexId z = 0; z < set.universe(); ++z) {
        if (set.contains(z)) {
            out.insert(z);
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < members.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < members.size() && !found; ++j) {
                found = between(metric, members[i], z, members[j]);
            }
        }
        if (found) out.insert(z);
    }
    return out;
}

VertexSet convex_hull(const Metric& metric, const VertexSet& set) {
    check_universe(metric, set);
    VertexSet current = set;
    for (std::size_t round = 0; round <= set.universe(); ++round) {
        VertexSet next = c1(metric, current);
        if (next == current) return current;
        current = std::move(next);
    }
    throw std::logic_error("convex hull iteration did not reach a fixed point within |X| rounds");
}

bool is_convex_set(const Metric& metric, const VertexSet& set) { return !find_escape(metric, set).has_value(); }

std::optional<BetweennessWitness> find_escape(const Metric& metric, const VertexSet& set) {
    check_universe(metric, set);
    const auto members = set.members();
    for (VertexId z = 0; z < set.universe(); ++z) {
        if (set.contains(z)) continue;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (between(metric, members[i], z, members[j])) return BetweennessWitness{members[i], z, members[j]};
            }
        }
    }
    return std::nullopt;
}

ConvexityVerdict is_convex_fn_at(const Metric& metric, const VertexFunction& f, VertexId z) {
    return convex_at(metric, f, z, nullptr);
}

ConvexityVerdict is_convex_fn_at(const Metric& metric, const VertexFunction& f, VertexId z, const VertexSet& domain) {
    check_universe(metric, domain);
    return convex_at(metric, f, z, &domain);
}

bool is_convex_fn(const Metric& metric, const VertexFunction& f) {
    for (VertexId z = 0; z < metric.vertex_count(); ++z) {
        if (!is_convex_fn_at(metric, f, z)) return false;
    }
    return true;
}

double dist_to_set(const Metric& metric, VertexId x, const VertexSet& set) {
    check_universe(metric, set);
    double best = kInfinity;
    for (VertexId y = 0; y < set.universe(); ++y) {
        if (set.contains(y)) best = std::min(best, metric.distance(x, y));
    }
    return best;
}

VertexFunction distance_function(const Metric& metric, const VertexSet& set) {
    VertexFunction f(metric.vertex_count());
    for (VertexId x = 0; x < metric.vertex_count(); ++x) f.set(x, dist_to_set(metric, x, set));
    return f;
}

VertexFunction indicator(const VertexSet& set) {
    VertexFunction f(set.universe(), kInfinity);
    for (VertexId v : set.members()) f.set(v, 0.0);
    return f;
}

VertexSet brute_force_hull_oracle(const Metric& metric, const VertexSet& set) {
    check_universe(metric, set);
    const std::size_t n = set.universe();
    if (n > kBruteForceHullLimit) {
        throw std::invalid_argument("brute-force hull oracle limited to " + std::to_string(kBruteForceHullLimit) +
                                    " vertices, got " + std::to_string(n));
    }
    const std::uint64_t base = set.mask();
    const std::uint64_t free = ((std::uint64_t{1} << n) - 1) & ~base;
    std::uint64_t hull = (std::uint64_t{1} << n) - 1;
    // Walk every subset of the free vertices; each gives a superset of `set`.
    std::uint64_t extra = 0;
    while (true) {
        const std::uint64_t candidate = base | extra;
        if ((candidate & hull) != hull) {
            if (is_convex_set(metric, VertexSet::from_mask(n, candidate))) hull &= candidate;
        }
        if (extra == free) break;
        extra = (extra - free) & free;
    }
    return VertexSet::from_mask(n, hull);
}

}  // namespace graphcvx
