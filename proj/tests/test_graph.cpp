#include <doctest.h>

#include <stdexcept>
#include <random>

#include "atcover/graph.hpp"

using namespace atcover;

namespace {

Graph complete(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back("v" + std::to_string(i));
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return make_graph(std::move(labels), edges);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return make_graph(std::move(labels), edges);
}

}  // namespace

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(make_graph({"a"}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("neighbors") {
    Graph k4 = complete(4);
    CHECK(neighbors(k4, 0) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(neighbors(k4, 4), std::out_of_range);
    CHECK_THROWS_AS(neighbors(k4, -1), std::out_of_range);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete(4)));
    CHECK_FALSE(is_connected(make_graph({"a", "b"}, {})));
    CHECK(is_connected(Graph{}));
}

TEST_CASE("adjacency matrix over GF(2)") {
    Graph empty2 = make_graph({"a", "b"}, {});
    Gf2Matrix zero = adjacency_gf2(empty2);
    CHECK(rank(zero) == 0);

    Graph k2 = make_graph({"a", "b"}, {{0, 1}});
    Gf2Matrix m = adjacency_gf2(k2);
    CHECK(m.get(0, 1));
    CHECK(m.get(1, 0));
    CHECK_FALSE(m.get(0, 0));

    std::mt19937_64 rng(3);
    Graph g = random_graph(rng, 20, 0.3);
    Gf2Matrix a = adjacency_gf2(g);
    for (int u = 0; u < g.n; ++u) {
        CHECK_FALSE(a.get(u, u));
        std::size_t weight = 0;
        for (int v = 0; v < g.n; ++v) {
            CHECK(a.get(u, v) == a.get(v, u));
            weight += a.get(u, v);
        }
        CHECK(weight == static_cast<std::size_t>(degree(g, u)));
    }
}

TEST_CASE("doubling product") {
    Graph k2 = make_graph({"a", "b"}, {{0, 1}});
    Graph c4 = lex_blowup(k2);
    CHECK(c4.n == 4);
    CHECK(edge_count(c4) == 4);
    CHECK(is_regular(c4, 2));
    CHECK(is_connected(c4));
    // Complete bipartite between the two pairs.
    CHECK(neighbors(c4, 0) == std::vector<int>{2, 3});
    CHECK(neighbors(c4, 1) == std::vector<int>{2, 3});

    Graph k4 = complete(4);
    Graph doubled = lex_blowup(k4);
    CHECK(doubled.n == 8);
    CHECK(is_regular(doubled, 6));
    for (int v = 0; v < k4.n; ++v)
        for (int x = 0; x < 2; ++x)
            CHECK(degree(doubled, 2 * v + x) == 2 * degree(k4, v));

    CHECK(lex_blowup(Graph{}).n == 0);
}

TEST_CASE("doubling preserves connectivity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 12, 0.25);
        bool no_isolated = true;
        for (int v = 0; v < g.n; ++v)
            if (degree(g, v) == 0) no_isolated = false;
        if (!no_isolated) continue;
        CHECK(is_connected(lex_blowup(g)) == is_connected(g));
    }
}

TEST_CASE("dot output") {
    Graph k2 = make_graph({"x", "y"}, {{0, 1}});
    std::string dot = to_dot(k2);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("label=\"x\"") != std::string::npos);

    std::string empty_dot = to_dot(Graph{});
    CHECK(empty_dot.find("--") == std::string::npos);
    CHECK(empty_dot.find("graph G {") != std::string::npos);
}

TEST_CASE("json round-trip") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 15), 0.3);
        Graph back = graph_from_json(to_json(g));
        CHECK(back == g);
    }
    CHECK(graph_from_json(to_json(Graph{})) == Graph{});
}
