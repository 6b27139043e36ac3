#include "instance.hpp"

#include <charconv>
#include <fstream>

namespace graphcvx::cli {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& context) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("bad integer '" + std::string(text) + "' in " + context);
    }
    return value;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

template <typename Read>
auto read_file(const std::string& path, Read&& read) {
    auto in = open(path);
    try {
        return read(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

}  // namespace

GroupSpec lattice_spec(const LatticeFlags& flags, const std::string& norm_name) {
    const auto norm = parse_norm(norm_name);
    if (!norm) throw UsageError("unknown norm '" + norm_name + "' (l1, l2, linf)");
    if (flags.window.empty()) throw UsageError("--window is required for a lattice");
    GroupSpec spec;
    spec.norm = *norm;
    spec.radius = flags.radius;
    if (flags.window.find(':') == std::string::npos) {
        const auto n = parse_int(flags.window, "--window");
        if (n <= 0) throw UsageError("--window N needs N > 0");
        spec.dimension = flags.dimension ? flags.dimension : 2;
        spec.window.assign(spec.dimension, AxisRange{-(n / 2), n - 1 - n / 2});
    } else {
        std::string_view rest = flags.window;
        while (true) {
            const auto comma = rest.find(',');
            const auto range = rest.substr(0, comma);
            const auto colon = range.find(':');
            if (colon == std::string_view::npos) throw UsageError("window range '" + std::string(range) + "' lacks ':'");
            spec.window.push_back({parse_int(range.substr(0, colon), "--window"),
                                   parse_int(range.substr(colon + 1), "--window")});
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        spec.dimension = spec.window.size();
        if (flags.dimension && flags.dimension != spec.dimension) {
            throw UsageError("--dim " + std::to_string(flags.dimension) + " but --window has " +
                             std::to_string(spec.dimension) + " ranges");
        }
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

Instance Instance::from_graph_file(const std::string& path, Tolerance tolerance) {
    Instance out;
    out.graph_ = std::make_shared<const Graph>(read_file(path, [](std::istream& in) { return read_graph(in); }));
    out.graph_metric_ = std::make_shared<const ShortestPathMetric>(out.graph_, tolerance);
    out.metric_ = out.graph_metric_;
    out.description_ = path;
    return out;
}

Instance Instance::from_lattice(const GroupSpec& spec, Tolerance tolerance) {
    Instance out;
    out.lattice_.emplace(spec, tolerance);
    out.graph_ = out.lattice_->shared_graph();
    out.graph_metric_ = std::make_shared<const ShortestPathMetric>(out.graph_, tolerance);
    out.metric_ = std::make_shared<const NormMetric>(*out.lattice_);
    std::string window;
    for (const auto& r : spec.window) {
        if (!window.empty()) window += ',';
        window += std::to_string(r.min) + ':' + std::to_string(r.max);
    }
    out.description_ = "lattice " + std::string(to_string(spec.norm)) + " r=" + format_value(spec.radius) +
                       " window " + window;
    return out;
}

const GroupLattice& Instance::require_lattice(const std::string& what) const {
    if (!lattice_) throw UsageError(what + " needs a lattice (--lattice NORM --window ...)");
    return *lattice_;
}

std::string Instance::description() const { return description_; }

Instance load_instance(const std::string& graph_path, const LatticeFlags& lattice, Tolerance tolerance) {
    if (!graph_path.empty() && !lattice.norm.empty()) throw UsageError("give either --graph or --lattice, not both");
    if (!graph_path.empty()) return Instance::from_graph_file(graph_path, tolerance);
    if (!lattice.norm.empty()) return Instance::from_lattice(lattice_spec(lattice, lattice.norm), tolerance);
    throw UsageError("an instance is required: --graph FILE or --lattice NORM --window ...");
}

VertexSet load_set(const std::string& path, const Graph& graph) {
    return read_file(path, [&](std::istream& in) { return read_vertex_set(in, graph); });
}

VertexFunction load_function(const std::string& path, const Graph& graph) {
    return read_file(path, [&](std::istream& in) { return read_vertex_function(in, graph); });
}

}  // namespace graphcvx::cli
