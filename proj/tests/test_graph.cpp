#include <doctest.h>

#include "gve/graph.hpp"
#include "oracles.hpp"

using namespace gve;

TEST_CASE("parse_edge_list: basic graphs") {
    Graph g = parse_edge_list("a b\nb c");
    CHECK(g.n == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);
    CHECK(g.edges[0].w == 1.0);
    CHECK(g.edges[1].u == 1);
    CHECK(g.edges[1].v == 2);
    CHECK(g.node_names[0] == "a");
    CHECK(g.node_names[2] == "c");

    Graph empty = parse_edge_list("");
    CHECK(empty.n == 0);
    CHECK(empty.edges.empty());

    Graph w = parse_edge_list("a b 2.5\n# comment\nb c 0.5");
    CHECK(w.n == 3);
    REQUIRE(w.edges.size() == 2);
    CHECK(w.edges[0].w == 2.5);
    CHECK(w.edges[1].w == 0.5);
}

TEST_CASE("parse_edge_list: errors name the line") {
    CHECK_THROWS_WITH_AS(parse_edge_list("a b\nc"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b c d"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b -1"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b 0"), doctest::Contains("non-positive"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b\nb a"), doctest::Contains("duplicate"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a a"), doctest::Contains("self-loop"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b x"), doctest::Contains("bad weight"),
                         ParseError);
}

TEST_CASE("components") {
    CHECK(components(parse_edge_list("a b\nb c")) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(components(parse_edge_list("a b\nc d")) ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    Graph singleton;
    singleton.n = 1;
    singleton.node_names = {"only"};
    singleton.node_index = {{"only", 0}};
    CHECK(components(singleton) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("apsp: 4-cycle distances") {
    Graph g = parse_edge_list("A B\nB C\nC D\nD A");
    DistanceMatrix D = apsp(g);
    CHECK(D.at(0, 2) == 2.0);  // diagonally opposite
    CHECK(D.at(0, 1) == 1.0);  // adjacent
    CHECK(D.at(1, 3) == 2.0);
    CHECK(D.at(0, 0) == 0.0);
}

TEST_CASE("apsp: disconnected plus-one rule") {
    Graph g = parse_edge_list("a b\nc d");
    DistanceMatrix D = apsp(g);
    // intra max = 1, so every cross distance is 2
    CHECK(D.at(0, 2) == 2.0);
    CHECK(D.at(1, 3) == 2.0);
    CHECK(D.at(0, 1) == 1.0);

    // no edges at all: cross distances are 1
    Graph iso;
    iso.n = 3;
    for (int i = 0; i < 3; ++i) {
        iso.node_names.push_back(std::string(1, char('a' + i)));
        iso.node_index.emplace(iso.node_names.back(), i);
    }
    DistanceMatrix Di = apsp(iso);
    CHECK(Di.at(0, 1) == 1.0);
    CHECK(Di.at(1, 2) == 1.0);
    CHECK(Di.at(0, 0) == 0.0);
}

TEST_CASE("apsp matches Floyd-Warshall on random connected graphs") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 7);
        bool unit = seed % 2 == 0;
        Graph g = oracle::random_connected_graph(n, 0.3, unit, seed);
        DistanceMatrix D = apsp(g);
        std::vector<double> fw = oracle::floyd_warshall(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (unit)
                    CHECK(D.at(i, j) == fw[static_cast<size_t>(i) * n + j]);
                else
                    CHECK(D.at(i, j) ==
                          doctest::Approx(fw[static_cast<size_t>(i) * n + j]).epsilon(1e-9));
            }
    }
}

TEST_CASE("apsp invariants on random graphs up to n=32") {
    for (uint64_t seed = 100; seed < 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 32);
        Graph g = oracle::random_graph(n, 0.15, seed % 3 != 0, seed);
        DistanceMatrix D = apsp(g);
        auto comps = components(g);
        std::vector<int> comp_of(n, -1);
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

        double max_intra = 0.0;
        for (int i = 0; i < n; ++i) {
            CHECK(D.at(i, i) == 0.0);
            for (int j = 0; j < n; ++j) {
                CHECK(D.at(i, j) == D.at(j, i));
                if (i != j) CHECK(D.at(i, j) > 0.0);
                if (comp_of[i] == comp_of[j]) max_intra = std::max(max_intra, D.at(i, j));
            }
        }
        // triangle inequality within components
        for (size_t c = 0; c < comps.size(); ++c)
            for (int i : comps[c])
                for (int j : comps[c])
                    for (int k : comps[c])
                        CHECK(D.at(i, k) <= D.at(i, j) + D.at(j, k) + 1e-9);
        // cross distances constant and strictly above every intra distance
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (comp_of[i] != comp_of[j]) {
                    CHECK(D.at(i, j) == max_intra + 1.0);
                    CHECK(D.at(i, j) > max_intra);
                }
    }
}
