#include "sptree/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sptree/error.hpp"
#include "sptree/parallel.hpp"
#include "sptree/rng.hpp"

namespace sptree {

namespace {

__extension__ using Wide = unsigned __int128;

struct PairSums {
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    Wide sum_sq = 0;
    Distance max = 0;

    void merge(const PairSums& other) {
        count += other.count;
        sum += other.sum;
        sum_sq += other.sum_sq;
        max = std::max(max, other.max);
    }
};

/// BFS into caller-owned scratch; returns the number of reached nodes.
std::size_t bfs_into(const Graph& g, NodeId source, std::vector<Distance>& dist, std::vector<NodeId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        const Distance next = dist[v] + 1;
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    return queue.size();
}

/// Accumulates distances from each listed source to every other node
/// (only_greater: to nodes with a larger id, so each unordered pair once).
PairSums accumulate(const Graph& g, std::span<const NodeId> sources, bool only_greater, std::size_t threads) {
    const std::size_t n = g.node_count();
    std::vector<PairSums> partial(chunk_count(sources.size(), threads));
    parallel_chunks(sources.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<Distance> dist(n);
        std::vector<NodeId> queue;
        queue.reserve(n);
        PairSums local;
        for (std::size_t i = begin; i < end; ++i) {
            const NodeId s = sources[i];
            if (bfs_into(g, s, dist, queue) != n) throw DisconnectedGraph(static_cast<std::size_t>(
                std::find(dist.begin(), dist.end(), kUnreachable) - dist.begin()));
            for (NodeId t = only_greater ? s + 1 : 0; t < n; ++t) {
                if (t == s) continue;
                const Distance d = dist[t];
                ++local.count;
                local.sum += d;
                local.sum_sq += static_cast<std::uint64_t>(d) * d;
                local.max = std::max(local.max, d);
            }
        }
        partial[chunk] = local;
    });
    PairSums total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

DistanceStats finish(const PairSums& sums, DistanceMode mode, std::size_t sources) {
    DistanceStats stats;
    stats.mode = mode;
    stats.sources = sources;
    stats.n_pairs = sums.count;
    stats.d_max = sums.max;
    const auto count = static_cast<long double>(sums.count);
    const long double mean = static_cast<long double>(sums.sum) / count;
    // N * S2 - S1^2 is exact in 128-bit integers
    const Wide s1 = sums.sum;
    const Wide spread = sums.sum_sq * sums.count - s1 * s1;
    const long double variance = static_cast<long double>(spread) / (count * count);
    stats.d_avg = static_cast<double>(mean);
    stats.d_std = static_cast<double>(std::sqrt(variance));
    stats.c_d = stats.d_std / stats.d_avg;
    return stats;
}

void require_measurable(const Graph& g) {
    if (g.node_count() < 2) throw InvalidArgument("distance statistics need at least two nodes");
}

}  // namespace

std::string_view to_string(DistanceMode mode) noexcept {
    return mode == DistanceMode::exact ? "exact" : "sampled";
}

std::vector<Distance> sssp_bfs(const Graph& g, NodeId source) {
    if (source >= g.node_count()) throw InvalidArgument("source node out of range");
    std::vector<Distance> dist(g.node_count());
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    bfs_into(g, source, dist, queue);
    return dist;
}

DistanceStats distance_stats_exact(const Graph& g, std::size_t threads) {
    require_measurable(g);
    std::vector<NodeId> sources(g.node_count());
    std::iota(sources.begin(), sources.end(), NodeId{0});
    return finish(accumulate(g, sources, true, threads), DistanceMode::exact, sources.size());
}

DistanceStats distance_stats_sampled(const Graph& g, std::size_t sources, std::uint64_t seed,
                                     std::size_t threads) {
    require_measurable(g);
    const std::size_t n = g.node_count();
    if (sources == 0 || sources > n) throw InvalidArgument("sampled sources must be in 1..n");
    // partial Fisher-Yates: the first `sources` slots are a uniform subset
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < sources; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(order[i], order[pick(rng)]);
    }
    order.resize(sources);
    std::sort(order.begin(), order.end());
    return finish(accumulate(g, order, false, threads), DistanceMode::sampled, sources);
}

DistanceStats distance_stats(const Graph& g, std::uint64_t seed, std::size_t threads) {
    if (g.node_count() <= kExactNodeLimit) return distance_stats_exact(g, threads);
    return distance_stats_sampled(g, kDefaultSources, seed, threads);
}

double random_graph_diameter_estimate(double n, double k_avg) {
    if (!(k_avg > 1.0)) throw InvalidArgument("diameter estimate needs k_avg > 1");
    if (!(n >= 1.0)) throw InvalidArgument("diameter estimate needs n >= 1");
    return std::log(n) / std::log(k_avg);
}

double average_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0.0;
    std::vector<char> mark(n, 0);
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const auto row = g.neighbors(v);
        if (row.size() < 2) continue;
        for (NodeId w : row) mark[w] = 1;
        std::uint64_t links = 0;
        for (NodeId w : row) {
            for (NodeId x : g.neighbors(w)) links += mark[x];
        }
        for (NodeId w : row) mark[w] = 0;
        // every triangle edge is seen from both ends
        const double k = static_cast<double>(row.size());
        total += static_cast<double>(links) / (k * (k - 1.0));
    }
    return total / static_cast<double>(n);
}

}  // namespace sptree
