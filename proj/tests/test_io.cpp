#include <gtest/gtest.h>

#include "brute.hpp"
#include "p5g/generator.hpp"
#include "p5g/graph6.hpp"
#include "p5g/tree_io.hpp"

using namespace p5g;

namespace {

std::size_t offset_of(std::string_view text) {
    try {
        parse_graph6(text);
    } catch (const FormatError& e) {
        return e.offset();
    }
    return SIZE_MAX;
}

} // namespace

// Reference strings produced by an independent graph6 writer.
TEST(Graph6, ReferenceStrings) {
    EXPECT_EQ(emit_graph6(Graph{}), "?");
    EXPECT_EQ(emit_graph6(Graph::on_range(1, {})), "@");
    EXPECT_EQ(emit_graph6(Graph::on_range(2, {{0, 1}})), "A_");
    EXPECT_EQ(emit_graph6(Graph::on_range(4, {{0, 1}, {1, 2}, {2, 3}})), "Ch");
    EXPECT_EQ(emit_graph6(Graph::on_range(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})), "Dhc");
    EXPECT_EQ(emit_graph6(Graph::on_range(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {4, 5}})), "EhOg");
    std::vector<Edge> k7;
    for (Vertex i = 0; i < 7; ++i)
        for (Vertex j = i + 1; j < 7; ++j) k7.emplace_back(i, j);
    EXPECT_EQ(emit_graph6(Graph::on_range(7, k7)), "F~~~w");
    Graph petersen = Graph::on_range(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                          {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    EXPECT_EQ(emit_graph6(petersen), "IheA@GUAo");
    EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen);
    EXPECT_EQ(parse_graph6("Dhc\n"), Graph::on_range(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
}

TEST(Graph6, RoundTripRandomGraphs) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 1000; ++i) {
        Graph g = brute::random_graph(rng, static_cast<std::size_t>(i % 21));
        ASSERT_EQ(parse_graph6(emit_graph6(g)), g);
    }
    Graph big = brute::random_graph(rng, kGraph6MaxOrder);
    EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(Graph6, ErrorOffsets) {
    EXPECT_EQ(offset_of(""), 0u);
    EXPECT_EQ(offset_of("D h"), 1u);
    EXPECT_EQ(offset_of("Dh"), 2u);
    EXPECT_EQ(offset_of("Dhcc"), 3u);
    EXPECT_EQ(offset_of("Dhd"), 2u); // low padding bit set
    EXPECT_EQ(offset_of("~??"), 0u);
    EXPECT_THROW(emit_graph6(Graph::from_edges({1, 2}, {})), PreconditionError);
}

TEST(EdgeList, Parsing) {
    EXPECT_EQ(parse_edge_list("0 1\n\n1 2\n"), Graph::on_range(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(parse_edge_list(""), Graph{});
    EXPECT_EQ(parse_edge_list(emit_edge_list(Graph::on_range(4, {{0, 3}, {1, 2}}))),
              Graph::on_range(4, {{0, 3}, {1, 2}}));
    try {
        parse_edge_list("0 1\n2 2\n");
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    EXPECT_THROW(parse_edge_list("0 x\n"), FormatError);
    EXPECT_THROW(parse_edge_list("0 1 2\n"), FormatError);
    EXPECT_THROW(parse_edge_list("0 64\n"), FormatError);
}

TEST(ParseGraph, AutoDetect) {
    EXPECT_EQ(parse_graph("Ch\n"), Graph::on_range(4, {{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(parse_graph("\n0 1\n1 2\n"), Graph::on_range(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(parse_graph("A_", GraphFormat::Graph6), Graph::on_range(2, {{0, 1}}));
}

TEST(TreeDocument, RoundTrip) {
    GenConfig cfg;
    cfg.max_depth = 4;
    for (std::uint64_t s = 0; s < 60; ++s) {
        cfg.seed = s;
        Generated out = generate(cfg);
        const std::string text = write_tree_document({out.graph, out.tree});
        TreeDocument doc = read_tree_document(text);
        ASSERT_EQ(doc.root_graph, out.graph);
        ASSERT_EQ(doc.tree, out.tree);
        ASSERT_EQ(write_tree_document(doc), text);
    }
}

TEST(TreeDocument, Rejections) {
    Graph c5 = Graph::on_range(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    std::string text = write_tree_document({c5, decompose(c5)});
    auto bumped = text;
    bumped.replace(bumped.find("\"version\": 1"), 12, "\"version\": 2");
    try {
        read_tree_document(bumped);
        FAIL();
    } catch (const MalformedTree& e) {
        EXPECT_EQ(e.path(), "document.version");
    }
    EXPECT_THROW(read_tree_document("{\"version\": 1,"), FormatError);
    auto no_node = text;
    no_node.replace(no_node.find("\"node\""), 6, "\"nope\"");
    EXPECT_THROW(read_tree_document(no_node), MalformedTree);
}
