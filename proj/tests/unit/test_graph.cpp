#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sptree/disjoint_set.hpp"
#include "sptree/error.hpp"
#include "sptree/graph.hpp"

using namespace sptree;

namespace {

void check_simple(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto row = g.neighbors(v);
        degree_sum += row.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            CHECK(row[i] != v);
            if (i > 0) CHECK(row[i - 1] < row[i]);
            CHECK(g.has_edge(row[i], v));
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("parse: plain numeric edge list") {
    const auto list = parse_edge_list("0 1\n1 2\n");
    CHECK(list.node_count() == 3);
    REQUIRE(list.edges.size() == 2);
    CHECK(list.edges[0] == Edge{0, 1});
    CHECK(list.edges[1] == Edge{1, 2});
}

TEST_CASE("parse: comments skipped and multiplicity kept") {
    const auto list = parse_edge_list("# c\na b\nb a\n");
    CHECK(list.node_count() == 2);
    REQUIRE(list.edges.size() == 2);
    CHECK(list.labels[list.edges[0].u] == "a");
    CHECK(list.labels[list.edges[0].v] == "b");
    CHECK(list.labels[list.edges[1].u] == "b");
    CHECK(list.labels[list.edges[1].v] == "a");
}

TEST_CASE("parse: malformed line reports its number") {
    try {
        parse_edge_list("x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    try {
        parse_edge_list("0 1\n% note\n\n7\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("parse: empty input is an error") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# only a comment\n\n"), ParseError);
}

TEST_CASE("parse: crlf, tabs and trailing columns") {
    const auto list = parse_edge_list("1\t2\t0.5\r\n2 3 1700000000\r\n");
    CHECK(list.node_count() == 3);
    CHECK(list.labels == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("parse: numeric labels ordered by value, others lexicographically") {
    const auto numeric = parse_edge_list("10 9\n9 100\n");
    CHECK(numeric.labels == std::vector<std::string>{"9", "10", "100"});
    const auto mixed = parse_edge_list("b 10\na 9\n");
    CHECK(mixed.labels == std::vector<std::string>{"10", "9", "a", "b"});
    for (std::size_t i = 0; i < mixed.labels.size(); ++i) CHECK(mixed.label_map.at(mixed.labels[i]) == i);
}

TEST_CASE("simplify: loops and duplicates dropped") {
    const auto list = EdgeList::from_ids(3, {{0, 1}, {1, 0}, {2, 2}});
    const Graph g = simplify(list);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.degree(2) == 0);
    check_simple(g);
}

TEST_CASE("simplify: path and empty graph") {
    const Graph p = simplify(EdgeList::from_ids(3, {{0, 1}, {1, 2}}));
    CHECK(p.edge_count() == 2);
    const Graph empty = simplify(EdgeList{});
    CHECK(empty.node_count() == 0);
    CHECK(empty.edge_count() == 0);
    CHECK(empty.average_degree() == 0.0);
}

TEST_CASE("from_edges rejects out-of-range endpoints") {
    const std::vector<Edge> edges{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, edges), InvalidArgument);
}

TEST_CASE("largest component of two triangles and a tail") {
    const Graph g = oracle::from_pairs(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {5, 6}});
    CHECK(largest_component_nodes(g) == std::vector<NodeId>{3, 4, 5, 6});
    const Graph lcc = largest_connected_component(g);
    CHECK(lcc.node_count() == 4);
    CHECK(lcc.edge_count() == 4);
    CHECK(is_connected(lcc));
}

TEST_CASE("largest component: identity, ties and isolated nodes") {
    const Graph k4 = oracle::complete(4);
    CHECK(largest_connected_component(k4) == k4);

    const Graph tie = oracle::from_pairs(4, {{2, 3}, {0, 1}});
    CHECK(largest_component_nodes(tie) == std::vector<NodeId>{0, 1});

    const Graph isolated = Graph::from_edges(5, {});
    const Graph single = largest_connected_component(isolated);
    CHECK(single.node_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_AS(largest_connected_component(Graph{}), InvalidArgument);
}

TEST_CASE("degree sequences") {
    CHECK(degree_sequence(oracle::path(3)) == std::vector<std::size_t>{1, 2, 1});
    CHECK(degree_sequence(oracle::cycle(3)) == std::vector<std::size_t>{2, 2, 2});
    CHECK(degree_sequence(oracle::star(5)) == std::vector<std::size_t>{5, 1, 1, 1, 1, 1});
}

TEST_CASE("canonical serialization round trips") {
    const Graph g = oracle::from_pairs(4, {{3, 1}, {0, 2}, {2, 1}, {1, 2}});
    const std::string text = to_edge_list_string(g);
    CHECK(text == "0 2\n1 2\n1 3\n");
    CHECK(simplify(parse_edge_list(text)) == g);
}

TEST_CASE("property: random multigraphs simplify to symmetric simple graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<Edge> raw;
        const std::size_t m = rng() % 80;
        for (std::size_t i = 0; i < m; ++i) {
            raw.push_back({static_cast<NodeId>(rng() % n), static_cast<NodeId>(rng() % n)});
        }
        const auto list = EdgeList::from_ids(n, raw);
        const Graph g = simplify(list);
        check_simple(g);
        CHECK(g.edge_count() <= raw.size());
        CHECK(g.node_count() == list.node_count());

        std::set<std::pair<NodeId, NodeId>> distinct;
        for (const Edge& e : raw)
            if (e.u != e.v) distinct.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
        CHECK(oracle::edge_set(g) == distinct);

        const Graph once = largest_connected_component(g);
        CHECK(largest_connected_component(once) == once);
        CHECK(is_connected(once));
    }
}

TEST_CASE("disjoint set: rank ties favour the lower id") {
    DisjointSet sets(6);
    CHECK(sets.component_count() == 6);
    CHECK(sets.unite(4, 2));
    CHECK(sets.find(4) == 2);
    CHECK(sets.unite(5, 3));
    CHECK(sets.find(5) == 3);
    CHECK(sets.unite(3, 4));
    CHECK(sets.find(5) == 2);
    CHECK_FALSE(sets.unite(2, 5));
    CHECK(sets.component_count() == 3);
    // find is idempotent
    CHECK(sets.find(sets.find(5)) == sets.find(5));
}
