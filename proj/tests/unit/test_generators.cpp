#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sptree/error.hpp"
#include "sptree/generators.hpp"

using namespace sptree;

TEST_CASE("erdos_renyi: p = 1 forces the edge") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = erdos_renyi(2, 1.0, seed);
        CHECK(g.edge_count() == 1);
    }
    CHECK(erdos_renyi(6, 5.0, 3) == oracle::complete(6));
}

TEST_CASE("erdos_renyi: determinism and seed sensitivity") {
    CHECK(erdos_renyi(250, 10.0, 7) == erdos_renyi(250, 10.0, 7));
    CHECK_FALSE(erdos_renyi(250, 10.0, 7) == erdos_renyi(250, 10.0, 8));
}

TEST_CASE("erdos_renyi: argument checks") {
    CHECK_THROWS_AS(erdos_renyi(1, 0.5, 0), InvalidArgument);
    CHECK_THROWS_AS(erdos_renyi(10, 0.0, 0), InvalidArgument);
    CHECK_THROWS_AS(erdos_renyi(10, 9.5, 0), InvalidArgument);
}

TEST_CASE("erdos_renyi: edge count over 1000 seeds within 3 sigma") {
    const std::size_t n = 100;
    const double p = 10.0 / 99.0;
    const double pairs = n * (n - 1) / 2.0;
    const double expected = pairs * p;
    double total = 0.0;
    const int runs = 1000;
    for (int seed = 0; seed < runs; ++seed) total += static_cast<double>(erdos_renyi(n, 10.0, seed).edge_count());
    const double sigma_of_mean = std::sqrt(pairs * p * (1 - p) / runs);
    CHECK(std::abs(total / runs - expected) < 3.0 * sigma_of_mean);
}

TEST_CASE("erdos_renyi: n = 250 mean edge count near 1250") {
    double total = 0.0;
    for (int seed = 0; seed < 200; ++seed) total += static_cast<double>(erdos_renyi(250, 10.0, seed).edge_count());
    // binomial sd of one draw is ~34, so the 200-run mean has sd ~2.4
    CHECK(std::abs(total / 200 - 1250.0) < 10.0);
}

TEST_CASE("erdos_renyi: skipping branch matches the expected density") {
    const std::size_t n = 20'000;
    const Graph g = erdos_renyi(n, 10.0, 5);
    const double expected = 10.0 * n / 2.0;
    CHECK(std::abs(static_cast<double>(g.edge_count()) - expected) < 5.0 * std::sqrt(expected));
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    CHECK(max_degree < 40);
    CHECK(erdos_renyi(n, 10.0, 5) == g);
}

TEST_CASE("barabasi_albert: exact edge count and connectivity") {
    const Graph g = barabasi_albert(6561, 10.0, 1);
    CHECK(g.edge_count() == 10 * (6561 - 6) / 2 + 15);
    CHECK(g.edge_count() == 32790);
    CHECK(is_connected(g));
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::size_t n = 50 + seed * 13;
        const Graph h = barabasi_albert(n, 6.0, seed);
        CHECK(h.edge_count() == 3 * (n - 4) + 6);
        CHECK(is_connected(h));
        for (NodeId v = 4; v < n; ++v) CHECK(h.degree(v) >= 3);
    }
}

TEST_CASE("barabasi_albert: seed clique and determinism") {
    CHECK(barabasi_albert(6, 10.0, 99) == oracle::complete(6));
    CHECK(barabasi_albert(500, 10.0, 3) == barabasi_albert(500, 10.0, 3));
}

TEST_CASE("barabasi_albert: argument checks") {
    CHECK_THROWS_AS(barabasi_albert(100, 5.0, 0), InvalidArgument);
    CHECK_THROWS_AS(barabasi_albert(100, 0.0, 0), InvalidArgument);
    CHECK_THROWS_AS(barabasi_albert(100, 4.5, 0), InvalidArgument);
    CHECK_THROWS_AS(barabasi_albert(5, 10.0, 0), InvalidArgument);
}

TEST_CASE("barabasi_albert: early nodes collect the hubs") {
    const Graph g = barabasi_albert(5000, 10.0, 11);
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    CHECK(max_degree > 100);
}

TEST_CASE("triangular lattice: L = 2 by hand") {
    const Graph g = triangular_lattice(4);
    CHECK(oracle::edge_set(g) == std::set<std::pair<NodeId, NodeId>>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("triangular lattice: counts, degrees and rounding") {
    for (std::size_t side = 2; side <= 20; ++side) {
        const Graph g = triangular_lattice(side * side);
        CHECK(g.node_count() == side * side);
        CHECK(g.edge_count() == 2 * side * (side - 1) + (side - 1) * (side - 1));
        CHECK(is_connected(g));
        std::size_t lo = 99, hi = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            lo = std::min(lo, g.degree(v));
            hi = std::max(hi, g.degree(v));
        }
        CHECK(lo >= 2);
        CHECK(hi <= 6);
        if (side >= 3) CHECK(hi == 6);
    }
    CHECK(triangular_lattice(9).edge_count() == 16);
    CHECK(triangular_lattice(15).node_count() == 9);
    CHECK(triangular_lattice(16) == triangular_lattice(16));
    CHECK_THROWS_AS(triangular_lattice(3), InvalidArgument);
}

TEST_CASE("generate dispatch and family names") {
    CHECK(parse_family("er") == Family::erdos_renyi);
    CHECK(parse_family("barabasi_albert") == Family::barabasi_albert);
    CHECK(parse_family("tri") == Family::triangular_lattice);
    CHECK_FALSE(parse_family("ws").has_value());
    CHECK(generate({Family::triangular_lattice, 16, 10.0, 0}) == triangular_lattice(16));
    CHECK(generate({Family::erdos_renyi, 100, 4.0, 9}) == erdos_renyi(100, 4.0, 9));
}
