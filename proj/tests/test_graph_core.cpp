#include <doctest.h>

#include <random>

#include "gpkit/canonical.hpp"
#include "gpkit/graph.hpp"
#include "gpkit/metrics.hpp"
#include "oracles.hpp"

using gpkit::Graph;
using gpkit::VertexSet;

TEST_SUITE("graph-core") {

TEST_CASE("graph_from_edges basics") {
    Graph k1 = gpkit::graph_from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    std::vector<std::pair<int, int>> c4_edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    Graph c4 = gpkit::graph_from_edges(4, c4_edges);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(0, 1));
    CHECK(c4.has_edge(1, 0));
    CHECK(!c4.has_edge(0, 2));
    CHECK(c4 == gpkit::cycle_graph(4));

    Graph k5 = gpkit::complete_graph(5);
    CHECK(k5.edge_count() == 10);
    for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
}

TEST_CASE("duplicate edges collapse") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 0}, {0, 1}};
    Graph g = gpkit::graph_from_edges(2, edges);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(gpkit::graph_from_edges(3, {{{0, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(gpkit::graph_from_edges(3, {{{0, 3}}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    Graph g = oracle::random_graph(9, 17);
    for (int u = 0; u < 9; ++u) {
        CHECK(!g.has_edge(u, u));
        for (int v = 0; v < 9; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
}

TEST_CASE("vertex sets") {
    VertexSet s(6);
    CHECK(s.empty());
    s.add(0);
    s.add(2);
    s.add(5);
    CHECK(s.count() == 3);
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
    CHECK(s.to_string() == "{0,2,5}");
    s.remove(2);
    CHECK(s.count() == 2);
    CHECK_THROWS_AS(s.add(6), std::out_of_range);
    CHECK(VertexSet(3).to_string() == "{}");
}

TEST_CASE("complement") {
    Graph k4 = gpkit::complete_graph(4);
    CHECK(gpkit::complement(k4).edge_count() == 0);

    Graph g = oracle::random_graph(8, 3);
    CHECK(gpkit::complement(gpkit::complement(g)) == g);

    // C5 is self-complementary
    Graph c5 = gpkit::cycle_graph(5);
    CHECK(gpkit::canonical_key(gpkit::complement(c5)) == gpkit::canonical_key(c5));
}

TEST_CASE("induced subgraphs") {
    Graph c4 = gpkit::cycle_graph(4);
    auto edge = gpkit::induced_subgraph(c4, VertexSet::from_indices(4, {{1, 2}}));
    CHECK(edge.graph.order() == 2);
    CHECK(edge.graph.edge_count() == 1);
    CHECK(edge.vertex_map == std::vector<int>{1, 2});

    auto diagonal = gpkit::induced_subgraph(c4, VertexSet::from_indices(4, {{1, 3}}));
    CHECK(diagonal.graph.edge_count() == 0);

    auto triangle = gpkit::induced_subgraph(gpkit::complete_graph(5),
                                            VertexSet::from_indices(5, {{0, 2, 4}}));
    CHECK(triangle.graph == gpkit::complete_graph(3));

    CHECK_THROWS_AS(gpkit::induced_subgraph(c4, VertexSet(4)), std::invalid_argument);
}

}  // TEST_SUITE
