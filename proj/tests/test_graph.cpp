#include <doctest.h>

#include <sstream>

#include "localhk/error.hpp"
#include "localhk/graph.hpp"
#include "support.hpp"

using namespace localhk;
using namespace testing;

TEST_CASE("load_graph builds a path and collapses duplicates") {
    const auto g = graph_from_text("0 1\n1 2");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);

    const auto h = graph_from_text("0 1\n1 0\n0 1");
    CHECK(h.num_vertices() == 2);
    CHECK(h.num_edges() == 1);
}

TEST_CASE("load_graph skips comments and compacts labels") {
    const auto g = graph_from_text("# header\n\n10 30\n  30 20 \n");
    REQUIRE(g.num_vertices() == 3);
    CHECK(g.original_id(0) == 10);
    CHECK(g.original_id(1) == 20);
    CHECK(g.original_id(2) == 30);
    CHECK(g.index_of(30) == 2);
    CHECK_FALSE(g.find(99).has_value());
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("load_graph reports self-loops and bad tokens with line numbers") {
    try {
        graph_from_text("0 1\n# c\n2 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(graph_from_text("0 x\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("0 -1\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("0\n"), ParseError);
}

TEST_CASE("Graph constructor rejects invalid input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, {5, 3}), Error);
}

TEST_CASE("dolphins fixture") {
    const auto g = load_graph(data_path("dolphins.edges"));
    CHECK(g.num_vertices() == 62);
    CHECK(g.num_edges() == 159);
    const auto s = load_subset(data_path("dolphins.subset"), g);
    CHECK(s.size() == 20);
    CHECK(is_connected_induced(g, s));
    CHECK_FALSE(vertex_boundary(g, s).empty());
}

TEST_CASE("vertex and edge boundary examples") {
    const auto g = p4();
    CHECK(vertex_boundary(g, VertexSubset(4, {1, 2})) == std::vector<VertexId>{0, 3});
    CHECK(vertex_boundary(g, VertexSubset(4, {0, 1, 2, 3})).empty());
    CHECK(vertex_boundary(p3(), VertexSubset(3, {1})) == std::vector<VertexId>{0, 2});

    CHECK(edge_boundary(g, VertexSubset(4, {1, 2})) == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(edge_boundary(g, VertexSubset(4, {})).empty());

    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(edge_boundary(star, VertexSubset(4, {0})).size() == 3);
}

TEST_CASE("is_connected_induced examples") {
    const auto g = p4();
    CHECK(is_connected_induced(g, VertexSubset(4, {1, 2})));
    CHECK_FALSE(is_connected_induced(g, VertexSubset(4, {0, 3})));
    CHECK(is_connected_induced(g, VertexSubset(4, {2})));
    CHECK_FALSE(is_connected_induced(g, VertexSubset(4, {})));
}

TEST_CASE("VertexSubset validation and index maps") {
    CHECK_THROWS(VertexSubset(4, {1, 1}));
    CHECK_THROWS(VertexSubset(4, {4}));
    const VertexSubset s(10, {7, 2, 5});
    REQUIRE(s.size() == 3);
    CHECK(s.global_of(0) == 2);
    CHECK(s.global_of(2) == 7);
    CHECK_FALSE(s.local_of(3).has_value());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(*s.local_of(s.global_of(i)) == i);
}

TEST_CASE("load_subset maps labels and rejects unknown ids") {
    const auto g = graph_from_text("5 7\n7 9\n");
    std::istringstream in("# S\n7\n9\n");
    const auto s = load_subset(in, g);
    CHECK(s.size() == 2);
    CHECK(s.global_of(0) == g.index_of(7));
    std::istringstream bad("8\n");
    CHECK_THROWS_AS(load_subset(bad, g), Error);
    std::istringstream dup("7\n7\n");
    CHECK_THROWS_AS(load_subset(dup, g), Error);
}

TEST_CASE("property: boundary identities on random graphs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_connected_graph(2 + trial % 15, 0.3, rng);
        std::vector<VertexId> members;
        std::bernoulli_distribution in(0.4);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (in(rng)) members.push_back(v);
        }
        const VertexSubset s(g.num_vertices(), members);
        const auto delta = vertex_boundary(g, s);
        const auto partial = edge_boundary(g, s);
        CHECK(partial.size() >= delta.size());
        for (auto v : delta) CHECK_FALSE(s.contains(v));
        for (const auto& e : partial) CHECK(s.contains(e.u) != s.contains(e.v));
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(*s.local_of(s.global_of(i)) == i);
    }
}

TEST_CASE("property: serialized graphs reload to the same adjacency") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_connected_graph(2 + trial % 20, 0.25, rng);
        std::ostringstream out;
        write_edge_list(out, g);
        const auto h = graph_from_text(out.str());
        REQUIRE(h.num_vertices() == g.num_vertices());
        CHECK(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()));
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const auto a = g.neighbors(v);
            const auto b = h.neighbors(v);
            CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
        }
    }
}
