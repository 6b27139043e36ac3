#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcvx/extended_real.hpp"
#include "graphcvx/graph.hpp"
#include "graphcvx/metric.hpp"
#include "graphcvx/vertex_function.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx {

// All three are homogeneous under integer scaling: ||k z|| = |k| ||z||.
enum class Norm { l1, l2, linf };

std::string_view to_string(Norm norm);
std::optional<Norm> parse_norm(std::string_view text);

using Point = std::vector<std::int64_t>;

// L1 and Linf are exact on integer points; L2 is a float.
double norm_of(Norm norm, std::span<const std::int64_t> point);

// "(c1,...,cn)", the vertex id format for lattice points.
std::string format_point(std::span<const std::int64_t> point);
std::optional<Point> parse_point(std::string_view text);

struct AxisRange {
    std::int64_t min = 0;
    std::int64_t max = 0;

    std::size_t length() const { return static_cast<std::size_t>(max - min + 1); }
};

struct GroupSpec {
    std::size_t dimension = 1;
    Norm norm = Norm::l1;
    double radius = 1.0;
    std::vector<AxisRange> window;  // one range per axis

    // Throws std::invalid_argument on an inconsistent spec.
    void validate() const;
};

// Axis-aligned window of Z^n whose graph joins x and y when
// 0 < ||x - y|| <= r, with edge weight ||x - y||. Vertex ids follow the
// lexicographic order of the coordinates, first axis most significant.
class GroupLattice {
public:
    explicit GroupLattice(GroupSpec spec, Tolerance tolerance = {});

    const GroupSpec& spec() const { return spec_; }
    const Graph& graph() const { return *graph_; }
    std::shared_ptr<const Graph> shared_graph() const { return graph_; }
    const Tolerance& tolerance() const { return tolerance_; }

    std::size_t vertex_count() const { return points_.size(); }
    const Point& point(VertexId v) const;
    std::optional<VertexId> vertex_at(std::span<const std::int64_t> point) const;

    // x + offset, when that point lies in the window.
    std::optional<VertexId> translate(VertexId x, std::span<const std::int64_t> offset) const;

    double norm(std::span<const std::int64_t> point) const { return norm_of(spec_.norm, point); }
    double distance(VertexId x, VertexId y) const;

    // Nonzero group elements within the radius, lexicographic order.
    std::span<const Point> ball() const { return ball_; }

    // x is interior iff x + zeta lies in the window for every ||zeta|| <= r.
    bool is_interior(VertexId v) const;
    VertexSet interior_vertices() const;

    // Non-fatal notes about the construction, e.g. an empty interior.
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    GroupSpec spec_;
    Tolerance tolerance_;
    std::vector<Point> points_;
    std::vector<Point> ball_;
    std::vector<char> interior_;
    std::shared_ptr<const Graph> graph_;
    std::vector<std::string> warnings_;
};

inline GroupLattice build_lattice(GroupSpec spec, Tolerance tolerance = {}) {
    return GroupLattice(std::move(spec), tolerance);
}

VertexSet interior_vertices(const GroupLattice& lattice);

// d(x,y) = ||x - y|| read off the group structure, not path lengths.
class NormMetric final : public Metric {
public:
    explicit NormMetric(const GroupLattice& lattice);

    double distance(VertexId x, VertexId y) const override;
    std::size_t vertex_count() const override { return points_.size(); }
    MetricKind kind() const override { return MetricKind::norm_induced; }

private:
    Norm norm_;
    std::vector<Point> points_;
};

inline NormMetric group_metric(const GroupLattice& lattice) { return NormMetric(lattice); }

struct MidpointWitness {
    Point offset;  // the violating z
    double lhs;    // 2 f(x)
    double rhs;    // f(x + z) + f(x - z)
};

struct MidpointVerdict {
    bool holds = true;
    std::optional<MidpointWitness> witness;

    explicit operator bool() const { return holds; }
};

// 2 f(x) <= f(x+z) + f(x-z) for every z != 0 with x +- z in the window.
// z and -z give the same inequality, so only z whose first nonzero coordinate
// is positive are scanned, in lexicographic order.
MidpointVerdict is_midpoint_convex_at(const GroupLattice& lattice, const VertexFunction& f, VertexId x);
bool is_midpoint_convex(const GroupLattice& lattice, const VertexFunction& f);

struct NearestNeighborWitness {
    VertexId y1;
    VertexId y2;
    VertexId z;
};

struct NearestNeighborVerdict {
    bool holds = true;
    std::optional<NearestNeighborWitness> witness;

    explicit operator bool() const { return holds; }
};

// For all y1 <= y2 in F and z in the window, some y in F has
// 2 ||y - z|| <= ||y1 + y2 - 2z||. Vacuously true for empty F.
NearestNeighborVerdict has_nearest_neighbor_property(const GroupLattice& lattice, const VertexSet& set);

}  // namespace graphcvx
