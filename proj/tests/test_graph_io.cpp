#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "graphcvx/extended_real.hpp"
#include "graphcvx/families.hpp"
#include "graphcvx/graph_io.hpp"

namespace graphcvx {
namespace {

std::size_t error_line(const std::function<void()>& body) {
    try {
        body();
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no ParseError";
    return 0;
}

TEST(GraphText, CommentsDefaultsAndWeights) {
    const Graph g = parse_graph("# a comment\nv lone\ne a b   # trailing\n\ne b c 2.5\n");
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(*g.edge_weight(g.vertex("a"), g.vertex("b")), 1.0);
    EXPECT_EQ(*g.edge_weight(g.vertex("c"), g.vertex("b")), 2.5);
    EXPECT_EQ(g.degree(g.vertex("lone")), 0u);
}

TEST(GraphText, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line([] { parse_graph("e a b\ne b a\n"); }), 2u);
    EXPECT_EQ(error_line([] { parse_graph("e a a\n"); }), 1u);
    EXPECT_EQ(error_line([] { parse_graph("\n\ne a b -1\n"); }), 3u);
    EXPECT_EQ(error_line([] { parse_graph("x a\n"); }), 1u);
    EXPECT_EQ(error_line([] { parse_graph("v\n"); }), 1u);
    EXPECT_EQ(error_line([] { parse_graph("e a b c d\n"); }), 1u);
}

TEST(GraphText, RoundTripPreservesIdsAndWeights) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_connected_graph(9, 0.3, rng);
        Graph weighted(9);
        std::uniform_int_distribution<int> w(1, 7);
        for (const auto& e : g.edges()) weighted.add_edge(e.u, e.v, w(rng) * 0.3);
        weighted.add_vertex("isolated");
        std::ostringstream out;
        write_graph(out, weighted);
        EXPECT_EQ(parse_graph(out.str()), weighted);
    }
    const auto tiling = triangular_tiling(3, 4);
    std::ostringstream out;
    write_graph(out, tiling.graph);
    EXPECT_EQ(parse_graph(out.str()), tiling.graph);
}

TEST(SetFile, ReadWrite) {
    const Graph g = parse_graph("e a x\ne x y\ne y z\ne z a\n");
    std::istringstream in("x\n# skip\nz\n");
    const auto s = read_vertex_set(in, g);
    EXPECT_EQ(s, VertexSet(4, {g.vertex("x"), g.vertex("z")}));
    std::ostringstream out;
    write_vertex_set(out, g, s);
    EXPECT_EQ(out.str(), "x\nz\n");

    std::istringstream unknown("x\nq\n");
    EXPECT_EQ(error_line([&] { read_vertex_set(unknown, g); }), 2u);
    std::istringstream twice("x\nx\n");
    EXPECT_EQ(error_line([&] { read_vertex_set(twice, g); }), 2u);
}

TEST(FunctionFile, ReadWrite) {
    const Graph g = parse_graph("e a b\ne b c\n");
    std::istringstream in("a 0.5\nb inf\nc -3\n");
    const auto f = read_vertex_function(in, g);
    EXPECT_EQ(f(0), 0.5);
    EXPECT_TRUE(std::isinf(f(1)));
    EXPECT_EQ(f(2), -3.0);
    std::ostringstream out;
    write_vertex_function(out, g, f);
    EXPECT_EQ(out.str(), "a 0.5\nb inf\nc -3\n");
    std::istringstream again(out.str());
    EXPECT_EQ(read_vertex_function(again, g), f);
}

TEST(FunctionFile, Errors) {
    const Graph g = parse_graph("e a b\n");
    std::istringstream unknown("a 1\n\nzz 2\n");
    EXPECT_EQ(error_line([&] { read_vertex_function(unknown, g); }), 3u);
    std::istringstream missing("a 1\n");
    EXPECT_EQ(error_line([&] { read_vertex_function(missing, g); }), 0u);
    std::istringstream bad("a one\nb 2\n");
    EXPECT_EQ(error_line([&] { read_vertex_function(bad, g); }), 1u);
    std::istringstream minus_inf("a -inf\nb 2\n");
    EXPECT_EQ(error_line([&] { read_vertex_function(minus_inf, g); }), 1u);
    std::istringstream dup("a 1\na 2\nb 0\n");
    EXPECT_EQ(error_line([&] { read_vertex_function(dup, g); }), 2u);
}

TEST(FormatValue, ShortestRoundTrip) {
    EXPECT_EQ(format_value(2.0), "2");
    EXPECT_EQ(format_value(0.1), "0.1");
    EXPECT_EQ(format_value(kInfinity), "inf");
    EXPECT_EQ(std::stod(format_value(std::sqrt(2.0))), std::sqrt(2.0));
}

}  // namespace
}  // namespace graphcvx
