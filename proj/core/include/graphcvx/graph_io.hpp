#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graphcvx/graph.hpp"
#include "graphcvx/vertex_function.hpp"
#include "graphcvx/vertex_set.hpp"

namespace graphcvx {

// Malformed input, with the 1-based line it was found on (0 when the problem
// is not tied to one line, e.g. a vertex left without a value).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Graph text format, one record per line, '#' starts a comment:
//   v <id>                 declare a vertex
//   e <id1> <id2> [weight] undirected edge, weight defaults to 1
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
// Declares every vertex in id order, then every edge; unit weights are omitted.
void write_graph(std::ostream& out, const Graph& graph);

// Set file: one vertex id per line.
VertexSet read_vertex_set(std::istream& in, const Graph& graph);
void write_vertex_set(std::ostream& out, const Graph& graph, const VertexSet& set);

// Function file: "<id> <value>" per line, value a decimal literal or "inf".
// Every vertex of the graph must receive exactly one value.
VertexFunction read_vertex_function(std::istream& in, const Graph& graph);
void write_vertex_function(std::ostream& out, const Graph& graph, const VertexFunction& f);

// Shortest round-trip decimal, or "inf".
std::string format_value(double value);

}  // namespace graphcvx
