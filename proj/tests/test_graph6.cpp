#include <doctest.h>

#include <random>

#include "gpkit/graph6.hpp"
#include "oracles.hpp"

using gpkit::Graph;
using gpkit::ParseError;

TEST_SUITE("graph6") {

TEST_CASE("frozen records match the oracle codec") {
    // "D?{" is the 5-vertex star with center 4: oracle decode fixes the edges
    auto [n, edges] = oracle::g6_decode("D?{");
    CHECK(n == 5);
    CHECK(edges == std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

    Graph star = gpkit::parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edge_list() == edges);
    CHECK(gpkit::to_graph6(star) == "D?{");

    CHECK(oracle::g6_encode(1, {}) == "@");
    CHECK(gpkit::to_graph6(Graph(1)) == "@");
    CHECK(gpkit::parse_graph6("@").order() == 1);

    // C4 packs its 6 triangle bits into a single body byte
    Graph c4 = gpkit::cycle_graph(4);
    std::string record = gpkit::to_graph6(c4);
    CHECK(record.size() == 2);
    CHECK(record == oracle::g6_encode(4, c4.edge_list()));
}

TEST_CASE("header and carriage returns are tolerated") {
    Graph g = gpkit::parse_graph6(">>graph6<<D?{");
    CHECK(gpkit::to_graph6(g) == "D?{");
    CHECK(gpkit::to_graph6(gpkit::parse_graph6("D?{\r")) == "D?{");
}

TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(gpkit::parse_graph6(""), ParseError);
    CHECK_THROWS_AS(gpkit::parse_graph6("?"), ParseError);          // order 0
    CHECK_THROWS_AS(gpkit::parse_graph6("~??"), ParseError);        // long form
    CHECK_THROWS_AS(gpkit::parse_graph6("D?"), ParseError);         // truncated
    CHECK_THROWS_AS(gpkit::parse_graph6("D?{{"), ParseError);       // trailing garbage
    CHECK_THROWS_AS(gpkit::parse_graph6(std::string(1, char(40))), ParseError);
    std::string bad = "D";
    bad.push_back(static_cast<char>(200));  // byte outside 63..126
    bad.push_back('{');
    CHECK_THROWS_AS(gpkit::parse_graph6(bad), ParseError);
    CHECK_THROWS_AS(gpkit::to_graph6(gpkit::complete_graph(63)), std::invalid_argument);
}

TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(n, rng());
        Graph back = gpkit::parse_graph6(gpkit::to_graph6(g));
        CHECK(back == g);
    }
    // and through the full short-form range, against the oracle codec
    for (int n : {11, 20, 33, 47, 62}) {
        Graph g = oracle::random_graph(n, static_cast<std::uint64_t>(n) * 77 + 5, 0.3);
        std::string record = gpkit::to_graph6(g);
        CHECK(record == oracle::g6_encode(n, g.edge_list()));
        CHECK(gpkit::parse_graph6(record) == g);
    }
}

}  // TEST_SUITE
