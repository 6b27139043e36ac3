#include "graphcvx/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "graphcvx/extended_real.hpp"

namespace graphcvx {

namespace {

// Whitespace-separated tokens of one line with any '#' comment removed.
std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<double> parse_number(std::string_view token) {
    if (token == "inf" || token == "+inf" || token == "Inf" || token == "+Inf") return kInfinity;
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

VertexId lookup(const Graph& graph, std::string_view id, std::size_t line) {
    if (auto v = graph.find(id)) return *v;
    throw ParseError(line, "unknown vertex '" + std::string(id) + "'");
}

template <typename Handler>
void for_each_record(std::istream& in, Handler&& handle) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = tokenize(line);
        if (!tokens.empty()) handle(tokens, number);
    }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

Graph read_graph(std::istream& in) {
    Graph graph;
    for_each_record(in, [&](const std::vector<std::string_view>& t, std::size_t line) {
        try {
            if (t[0] == "v") {
                if (t.size() != 2) throw ParseError(line, "expected 'v <id>'");
                graph.ensure_vertex(t[1]);
            } else if (t[0] == "e") {
                if (t.size() != 3 && t.size() != 4) throw ParseError(line, "expected 'e <id1> <id2> [weight]'");
                double weight = 1.0;
                if (t.size() == 4) {
                    auto w = parse_number(t[3]);
                    if (!w || !std::isfinite(*w)) throw ParseError(line, "bad weight '" + std::string(t[3]) + "'");
                    weight = *w;
                }
                const VertexId u = graph.ensure_vertex(t[1]);
                const VertexId v = graph.ensure_vertex(t[2]);
                graph.add_edge(u, v, weight);
            } else {
                throw ParseError(line, "unknown record '" + std::string(t[0]) + "'");
            }
        } catch (const GraphError& e) {
            throw ParseError(line, e.what());
        }
    });
    return graph;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) out << "v " << graph.name(v) << '\n';
    for (const auto& e : graph.edges()) {
        out << "e " << graph.name(e.u) << ' ' << graph.name(e.v);
        if (e.weight != 1.0) out << ' ' << format_value(e.weight);
        out << '\n';
    }
}

VertexSet read_vertex_set(std::istream& in, const Graph& graph) {
    VertexSet set(graph.vertex_count());
    for_each_record(in, [&](const std::vector<std::string_view>& t, std::size_t line) {
        if (t.size() != 1) throw ParseError(line, "expected one vertex id per line");
        const VertexId v = lookup(graph, t[0], line);
        if (set.contains(v)) throw ParseError(line, "vertex '" + std::string(t[0]) + "' listed twice");
        set.insert(v);
    });
    return set;
}

void write_vertex_set(std::ostream& out, const Graph& graph, const VertexSet& set) {
    for (VertexId v : set.members()) out << graph.name(v) << '\n';
}

VertexFunction read_vertex_function(std::istream& in, const Graph& graph) {
    std::vector<std::optional<double>> values(graph.vertex_count());
    for_each_record(in, [&](const std::vector<std::string_view>& t, std::size_t line) {
        if (t.size() != 2) throw ParseError(line, "expected '<id> <value>'");
        const VertexId v = lookup(graph, t[0], line);
        if (values[v]) throw ParseError(line, "vertex '" + std::string(t[0]) + "' given twice");
        auto value = parse_number(t[1]);
        if (!value) throw ParseError(line, "bad value '" + std::string(t[1]) + "' (decimal or inf)");
        values[v] = *value;
    });
    std::vector<double> dense(values.size());
    for (VertexId v = 0; v < values.size(); ++v) {
        if (!values[v]) throw ParseError(0, "no value for vertex '" + graph.name(v) + "'");
        dense[v] = *values[v];
    }
    return VertexFunction(std::move(dense));
}

void write_vertex_function(std::ostream& out, const Graph& graph, const VertexFunction& f) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) out << graph.name(v) << ' ' << format_value(f(v)) << '\n';
}

std::string format_value(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

}  // namespace graphcvx
