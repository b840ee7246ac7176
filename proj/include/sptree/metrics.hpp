#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "sptree/graph.hpp"

namespace sptree {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

enum class DistanceMode { exact, sampled };

std::string_view to_string(DistanceMode mode) noexcept;

/// Summary of pairwise hop distances. In sampled mode d_max is the largest
/// eccentricity among the sampled sources, a lower bound on the diameter.
struct DistanceStats {
    double d_avg = 0.0;
    Distance d_max = 0;
    double d_std = 0.0;  // population standard deviation
    double c_d = 0.0;    // d_std / d_avg
    DistanceMode mode = DistanceMode::exact;
    std::size_t sources = 0;
    std::uint64_t n_pairs = 0;  // unordered pairs (exact) or (source, target) pairs (sampled)
};

/// Hop distances from `source`; unreachable nodes get kUnreachable.
std::vector<Distance> sssp_bfs(const Graph& g, NodeId source);

/// All-pairs statistics by one BFS per node. Needs a connected graph with
/// n >= 2. Sums are accumulated in integers, so the result does not depend on
/// the thread count.
DistanceStats distance_stats_exact(const Graph& g, std::size_t threads = 1);

/// Statistics over BFS from `sources` distinct uniformly chosen nodes.
DistanceStats distance_stats_sampled(const Graph& g, std::size_t sources, std::uint64_t seed,
                                     std::size_t threads = 1);

inline constexpr std::size_t kExactNodeLimit = std::size_t{1} << 14;
inline constexpr std::size_t kDefaultSources = 256;

/// Exact up to kExactNodeLimit nodes, sampled with kDefaultSources above.
DistanceStats distance_stats(const Graph& g, std::uint64_t seed, std::size_t threads = 1);

/// log n / log k_avg.
double random_graph_diameter_estimate(double n, double k_avg);

/// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double average_clustering(const Graph& g);

}  // namespace sptree
