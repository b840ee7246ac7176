#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sptree/error.hpp"
#include "sptree/generators.hpp"
#include "sptree/metrics.hpp"
#include "sptree/spanning.hpp"

using namespace sptree;

TEST_CASE("sssp_bfs on small graphs") {
    CHECK(sssp_bfs(oracle::path(3), 0) == std::vector<Distance>{0, 1, 2});
    CHECK(sssp_bfs(oracle::star(4), 0) == std::vector<Distance>{0, 1, 1, 1, 1});
    CHECK(sssp_bfs(Graph::from_edges(2, {}), 0) == std::vector<Distance>{0, kUnreachable});
}

TEST_CASE("exact stats: path of three nodes") {
    const DistanceStats s = distance_stats_exact(oracle::path(3));
    CHECK(s.d_avg == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(s.d_max == 2);
    CHECK(s.d_std == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-15));
    CHECK(s.c_d == doctest::Approx(0.35355339059327373).epsilon(1e-14));
    CHECK(s.n_pairs == 3);
    CHECK(s.mode == DistanceMode::exact);
}

TEST_CASE("exact stats: complete graphs") {
    for (std::size_t n = 2; n < 9; ++n) {
        const DistanceStats s = distance_stats_exact(oracle::complete(n));
        CHECK(s.d_avg == 1.0);
        CHECK(s.d_max == 1);
        CHECK(s.c_d == 0.0);
    }
}

TEST_CASE("exact stats: preconditions") {
    CHECK_THROWS_AS(distance_stats_exact(oracle::from_pairs(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
    CHECK_THROWS_AS(distance_stats_exact(Graph::from_edges(1, {})), InvalidArgument);
}

TEST_CASE("property: exact stats agree with Floyd-Warshall") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_connected(3 + seed % 9, 0.3, seed);
        const DistanceStats s = distance_stats_exact(g);
        const auto want = oracle::pair_moments(g);
        CHECK(s.d_avg == doctest::Approx(want.mean).epsilon(1e-12));
        CHECK(s.d_max == static_cast<Distance>(want.max));
        CHECK(s.d_std == doctest::Approx(want.stddev).epsilon(1e-12));
        CHECK(s.d_avg >= 1.0);
        CHECK(static_cast<double>(s.d_max) >= s.d_avg);
        CHECK(s.c_d >= 0.0);
        CHECK(s.c_d == doctest::Approx(s.d_std / s.d_avg));
    }
}

TEST_CASE("property: aggregating per-source BFS reproduces the exact mean") {
    const Graph g = largest_connected_component(erdos_renyi(300, 4.0, 17));
    std::uint64_t sum = 0;
    std::uint64_t pairs = 0;
    Distance max = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        const auto d = sssp_bfs(g, s);
        for (NodeId t = s + 1; t < g.node_count(); ++t) {
            sum += d[t];
            ++pairs;
            max = std::max(max, d[t]);
        }
    }
    const DistanceStats s = distance_stats_exact(g);
    CHECK(s.n_pairs == pairs);
    CHECK(s.d_avg == static_cast<double>(sum) / static_cast<double>(pairs));
    CHECK(s.d_max == max);
}

TEST_CASE("exact stats do not depend on the thread count") {
    const Graph g = barabasi_albert(2000, 6.0, 2);
    const DistanceStats one = distance_stats_exact(g, 1);
    const DistanceStats many = distance_stats_exact(g, 4);
    CHECK(one.d_avg == many.d_avg);
    CHECK(one.d_std == many.d_std);
    CHECK(one.d_max == many.d_max);
}

TEST_CASE("sampled stats: every source equals exact") {
    const Graph g = largest_connected_component(erdos_renyi(200, 6.0, 4));
    const DistanceStats exact = distance_stats_exact(g);
    const DistanceStats full = distance_stats_sampled(g, g.node_count(), 99);
    CHECK(full.mode == DistanceMode::sampled);
    CHECK(full.d_avg == doctest::Approx(exact.d_avg).epsilon(1e-12));
    CHECK(full.d_std == doctest::Approx(exact.d_std).epsilon(1e-12));
    CHECK(full.d_max == exact.d_max);
    CHECK(full.n_pairs == g.node_count() * (g.node_count() - 1));
}

TEST_CASE("sampled stats: single source on a star") {
    const Graph s = oracle::star(5);
    const double leaf = (1.0 + 2.0 * 4) / 5.0;
    bool center = false;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const DistanceStats st = distance_stats_sampled(s, 1, seed);
        CHECK(st.sources == 1);
        if (st.d_avg == 1.0) {
            center = true;
        } else {
            CHECK(st.d_avg == doctest::Approx(leaf));
        }
    }
    CHECK(center);
}

TEST_CASE("sampled stats: argument checks and determinism") {
    const Graph g = oracle::cycle(10);
    CHECK_THROWS_AS(distance_stats_sampled(g, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(distance_stats_sampled(g, 11, 1), InvalidArgument);
    const DistanceStats a = distance_stats_sampled(g, 4, 3, 1);
    const DistanceStats b = distance_stats_sampled(g, 4, 3, 3);
    CHECK(a.d_avg == b.d_avg);
    CHECK(a.d_std == b.d_std);
}

TEST_CASE("sampled stats: 256 sources within 2% on ER n = 4096") {
    const Graph g = largest_connected_component(erdos_renyi(4096, 10.0, 21));
    const double exact = distance_stats_exact(g, 0).d_avg;
    const DistanceStats sampled = distance_stats_sampled(g, 256, 5, 0);
    CHECK(std::abs(sampled.d_avg / exact - 1.0) < 0.02);
    CHECK(sampled.sources == 256);
}

TEST_CASE("automatic mode switches at the exact limit") {
    CHECK(distance_stats(oracle::cycle(30), 1).mode == DistanceMode::exact);
    const Graph big = triangular_lattice(kExactNodeLimit + 2 * 128 + 1);
    const DistanceStats s = distance_stats(big, 7, 0);
    CHECK(s.mode == DistanceMode::sampled);
    CHECK(s.sources == kDefaultSources);
}

TEST_CASE("random graph diameter estimate") {
    CHECK(random_graph_diameter_estimate(250, 10) == doctest::Approx(2.40).epsilon(0.002));
    CHECK(random_graph_diameter_estimate(10, 10) == doctest::Approx(1.0));
    CHECK(random_graph_diameter_estimate(1e4, 10) == doctest::Approx(4.0));
    CHECK_THROWS_AS(random_graph_diameter_estimate(100, 1.0), InvalidArgument);
}

TEST_CASE("average clustering") {
    CHECK(average_clustering(oracle::cycle(3)) == 1.0);
    CHECK(average_clustering(oracle::complete(5)) == 1.0);
    CHECK(average_clustering(oracle::path(6)) == 0.0);
    CHECK(average_clustering(oracle::star(4)) == 0.0);
    // triangle with a pendant: nodes 0,1 have C=1, node 2 has 1/3, pendant 0
    const Graph kite = oracle::from_pairs(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(average_clustering(kite) == doctest::Approx((1.0 + 1.0 + 1.0 / 3.0) / 4.0));
}

TEST_CASE("property: spanning subgraphs never shorten distances") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = largest_connected_component(erdos_renyi(150, 6.0, seed));
        const DistanceStats base = distance_stats_exact(g);
        for (TreeAlgorithm algo : {TreeAlgorithm::prim, TreeAlgorithm::kruskal, TreeAlgorithm::bfs,
                                   TreeAlgorithm::dfs}) {
            const DistanceStats t = distance_stats_exact(spanning_tree(g, algo, seed).tree);
            CHECK(t.d_avg >= base.d_avg);
            CHECK(t.d_max >= base.d_max);
            if (algo == TreeAlgorithm::bfs) CHECK(t.d_max <= 2 * base.d_max);
        }
    }
}
