#include "graphcvx/group_lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace graphcvx {

namespace {

// Odometer over the box [lo_i, hi_i], last axis fastest. Returns false once wrapped.
bool advance(Point& p, std::span<const std::int64_t> lo, std::span<const std::int64_t> hi) {
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] < hi[i]) {
            ++p[i];
            return true;
        }
        p[i] = lo[i];
    }
    return false;
}

bool lexicographically_positive(std::span<const std::int64_t> z) {
    for (auto c : z) {
        if (c != 0) return c > 0;
    }
    return false;
}

}  // namespace

std::string_view to_string(Norm norm) {
    switch (norm) {
        case Norm::l1: return "l1";
        case Norm::l2: return "l2";
        case Norm::linf: return "linf";
    }
    return "?";
}

std::optional<Norm> parse_norm(std::string_view text) {
    if (text == "l1" || text == "L1") return Norm::l1;
    if (text == "l2" || text == "L2") return Norm::l2;
    if (text == "linf" || text == "Linf" || text == "LINF") return Norm::linf;
    return std::nullopt;
}

double norm_of(Norm norm, std::span<const std::int64_t> point) {
    switch (norm) {
        case Norm::l1: {
            std::int64_t sum = 0;
            for (auto c : point) sum += std::llabs(c);
            return static_cast<double>(sum);
        }
        case Norm::linf: {
            std::int64_t best = 0;
            for (auto c : point) best = std::max<std::int64_t>(best, std::llabs(c));
            return static_cast<double>(best);
        }
        case Norm::l2: {
            std::int64_t sum = 0;
            for (auto c : point) sum += c * c;
            return std::sqrt(static_cast<double>(sum));
        }
    }
    return 0.0;
}

std::string format_point(std::span<const std::int64_t> point) {
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(point[i]);
    }
    out += ')';
    return out;
}

std::optional<Point> parse_point(std::string_view text) {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')') return std::nullopt;
    text = text.substr(1, text.size() - 2);
    Point out;
    while (true) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return out;
}

void GroupSpec::validate() const {
    if (dimension == 0) throw std::invalid_argument("lattice dimension must be positive");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("lattice radius must be positive");
    if (window.size() != dimension) {
        throw std::invalid_argument("window has " + std::to_string(window.size()) + " ranges for dimension " +
                                    std::to_string(dimension));
    }
    for (const auto& axis : window) {
        if (axis.min > axis.max) throw std::invalid_argument("empty window range");
    }
}

GroupLattice::GroupLattice(GroupSpec spec, Tolerance tolerance) : spec_(std::move(spec)), tolerance_(tolerance) {
    spec_.validate();
    const std::size_t n = spec_.dimension;

    Point lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = spec_.window[i].min;
        hi[i] = spec_.window[i].max;
    }
    Point p = lo;
    do {
        points_.push_back(p);
    } while (advance(p, lo, hi));

    // |zeta_i| <= ||zeta|| for all three norms, so the ball fits in [-R, R]^n.
    const auto reach = static_cast<std::int64_t>(std::floor(spec_.radius * (1.0 + tolerance_.eps)));
    Point ball_lo(n, -reach), ball_hi(n, reach);
    Point z = ball_lo;
    do {
        const double length = norm(z);
        if (length > 0.0 && tolerance_.less_equal(length, spec_.radius)) ball_.push_back(z);
    } while (advance(z, ball_lo, ball_hi));

    Graph graph;
    for (const auto& point : points_) graph.add_vertex(format_point(point));
    interior_.assign(points_.size(), 1);
    for (VertexId x = 0; x < points_.size(); ++x) {
        for (const auto& zeta : ball_) {
            const auto y = translate(x, zeta);
            if (!y) {
                interior_[x] = 0;
                continue;
            }
            if (x < *y) graph.add_edge(x, *y, norm(zeta));
        }
    }
    graph_ = std::make_shared<const Graph>(std::move(graph));

    if (std::none_of(interior_.begin(), interior_.end(), [](char c) { return c != 0; })) {
        warnings_.push_back("window has no interior vertex; lattice claims cannot be checked");
    }
}

const Point& GroupLattice::point(VertexId v) const {
    if (v >= points_.size()) throw GraphError("lattice vertex " + std::to_string(v) + " out of range");
    return points_[v];
}

std::optional<VertexId> GroupLattice::vertex_at(std::span<const std::int64_t> point) const {
    if (point.size() != spec_.dimension) return std::nullopt;
    VertexId index = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        const auto& axis = spec_.window[i];
        if (point[i] < axis.min || point[i] > axis.max) return std::nullopt;
        index = index * axis.length() + static_cast<std::size_t>(point[i] - axis.min);
    }
    return index;
}

std::optional<VertexId> GroupLattice::translate(VertexId x, std::span<const std::int64_t> offset) const {
    const Point& base = point(x);
    Point moved(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) moved[i] = base[i] + offset[i];
    return vertex_at(moved);
}

double GroupLattice::distance(VertexId x, VertexId y) const {
    const Point& a = point(x);
    const Point& b = point(y);
    Point diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return norm(diff);
}

bool GroupLattice::is_interior(VertexId v) const {
    point(v);
    return interior_[v] != 0;
}

VertexSet GroupLattice::interior_vertices() const {
    VertexSet out(points_.size());
    for (VertexId v = 0; v < points_.size(); ++v) {
        if (interior_[v]) out.insert(v);
    }
    return out;
}

VertexSet interior_vertices(const GroupLattice& lattice) { return lattice.interior_vertices(); }

NormMetric::NormMetric(const GroupLattice& lattice) : Metric(lattice.tolerance()), norm_(lattice.spec().norm) {
    points_.reserve(lattice.vertex_count());
    for (VertexId v = 0; v < lattice.vertex_count(); ++v) points_.push_back(lattice.point(v));
}

double NormMetric::distance(VertexId x, VertexId y) const {
    if (x >= points_.size() || y >= points_.size()) throw GraphError("lattice vertex out of range");
    const Point& a = points_[x];
    const Point& b = points_[y];
    Point diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return norm_of(norm_, diff);
}

MidpointVerdict is_midpoint_convex_at(const GroupLattice& lattice, const VertexFunction& f, VertexId x) {
    if (f.size() != lattice.vertex_count()) throw std::invalid_argument("function size does not match the lattice");
    const auto& spec = lattice.spec();
    const std::size_t n = spec.dimension;
    Point lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto span = static_cast<std::int64_t>(spec.window[i].length()) - 1;
        lo[i] = -span;
        hi[i] = span;
    }
    const double twice = scale(2.0, f(x));
    Point z = lo;
    Point minus(n);
    do {
        if (!lexicographically_positive(z)) continue;
        const auto plus_vertex = lattice.translate(x, z);
        if (!plus_vertex) continue;
        for (std::size_t i = 0; i < n; ++i) minus[i] = -z[i];
        const auto minus_vertex = lattice.translate(x, minus);
        if (!minus_vertex) continue;
        const double rhs = f(*plus_vertex) + f(*minus_vertex);
        if (!lattice.tolerance().less_equal(twice, rhs)) return {false, MidpointWitness{z, twice, rhs}};
    } while (advance(z, lo, hi));
    return {};
}

bool is_midpoint_convex(const GroupLattice& lattice, const VertexFunction& f) {
    for (VertexId x = 0; x < lattice.vertex_count(); ++x) {
        if (!is_midpoint_convex_at(lattice, f, x)) return false;
    }
    return true;
}

NearestNeighborVerdict has_nearest_neighbor_property(const GroupLattice& lattice, const VertexSet& set) {
    if (set.universe() != lattice.vertex_count()) {
        throw std::invalid_argument("vertex set universe does not match the lattice");
    }
    const auto members = set.members();
    const std::size_t n = lattice.spec().dimension;
    Point target(n), gap(n);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size(); ++j) {
            const Point& y1 = lattice.point(members[i]);
            const Point& y2 = lattice.point(members[j]);
            for (VertexId z = 0; z < lattice.vertex_count(); ++z) {
                const Point& pz = lattice.point(z);
                for (std::size_t k = 0; k < n; ++k) target[k] = y1[k] + y2[k] - 2 * pz[k];
                const double bound = lattice.norm(target);
                const bool covered = std::any_of(members.begin(), members.end(), [&](VertexId y) {
                    const Point& py = lattice.point(y);
                    for (std::size_t k = 0; k < n; ++k) gap[k] = py[k] - pz[k];
                    return lattice.tolerance().less_equal(2.0 * lattice.norm(gap), bound);
                });
                if (!covered) return {false, NearestNeighborWitness{members[i], members[j], z}};
            }
        }
    }
    return {};
}

}  // namespace graphcvx
