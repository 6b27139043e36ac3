#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "graphcvx/graphcvx.hpp"

namespace graphcvx::cli {

// Bad flags or inputs; reported on stderr with exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LatticeFlags {
    std::string norm;  // empty: no lattice requested
    std::size_t dimension = 0;  // 0: inferred from the window
    double radius = 1.0;
    std::string window;
};

// "a:b,c:d,..." one range per axis, or "N" for N points per axis around 0
// (e.g. 9 -> -4:4, 4 -> -2:1), repeated `dimension` times (default 2).
GroupSpec lattice_spec(const LatticeFlags& flags, const std::string& norm);

// A graph read from a file, or a lattice built from flags.
class Instance {
public:
    static Instance from_graph_file(const std::string& path, Tolerance tolerance);
    static Instance from_lattice(const GroupSpec& spec, Tolerance tolerance);

    const Graph& graph() const { return *graph_; }
    std::shared_ptr<const Graph> shared_graph() const { return graph_; }
    const GroupLattice* lattice() const { return lattice_ ? &*lattice_ : nullptr; }
    const GroupLattice& require_lattice(const std::string& what) const;

    // Graph metric for graph files, norm metric for lattices.
    const Metric& metric() const { return *metric_; }
    const ShortestPathMetric& graph_metric() const { return *graph_metric_; }
    std::string description() const;

private:
    std::shared_ptr<const Graph> graph_;
    std::optional<GroupLattice> lattice_;
    std::shared_ptr<const Metric> metric_;
    std::shared_ptr<const ShortestPathMetric> graph_metric_;
    std::string description_;
};

Instance load_instance(const std::string& graph_path, const LatticeFlags& lattice, Tolerance tolerance);

VertexSet load_set(const std::string& path, const Graph& graph);
VertexFunction load_function(const std::string& path, const Graph& graph);

}  // namespace graphcvx::cli
