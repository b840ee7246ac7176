#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <random>

namespace oracle {

Graph from_pairs(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_pairs(n, pairs);
}

Graph star(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
    return from_pairs(leaves + 1, pairs);
}

Graph complete(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return from_pairs(n, pairs);
}

Graph cycle(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<NodeId>((i + 1) % n));
    return from_pairs(n, pairs);
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                if (unit(rng) < p) pairs.emplace_back(i, j);
        Graph g = from_pairs(n, pairs);
        const auto d = floyd_warshall(g);
        if (std::all_of(d[0].begin(), d[0].end(), [](int x) { return x < kInf; })) return g;
    }
}

std::vector<int> bfs_levels(const Graph& g, NodeId source) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> level(n, kInf);
    std::queue<NodeId> q;
    level[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop();
        for (NodeId w : adj[v]) {
            if (level[w] == kInf) {
                level[w] = level[v] + 1;
                q.push(w);
            }
        }
    }
    return level;
}

PairMoments pair_moments(const Graph& g) {
    const auto d = floyd_warshall(g);
    const std::size_t n = g.node_count();
    double sum = 0.0;
    double count = 0.0;
    int max = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += d[i][j];
            count += 1.0;
            max = std::max(max, d[i][j]);
        }
    const double mean = sum / count;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) ss += (d[i][j] - mean) * (d[i][j] - mean);
    return {mean, max, std::sqrt(ss / count)};
}

std::vector<double> closeness(const Graph& g) {
    const auto d = floyd_warshall(g);
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) out[i] += 1.0 / d[i][j];
        out[i] /= static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto d = floyd_warshall(g);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

    std::vector<double> score(n, 0.0);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            double total = 0.0;
            std::vector<double> through(n, 0.0);
            std::vector<NodeId> stack{s};
            std::vector<bool> on(n, false);
            on[s] = true;
            std::function<void(NodeId)> walk = [&](NodeId v) {
                if (v == t) {
                    if (static_cast<int>(stack.size()) - 1 == d[s][t]) {
                        total += 1.0;
                        for (std::size_t i = 1; i + 1 < stack.size(); ++i) through[stack[i]] += 1.0;
                    }
                    return;
                }
                if (static_cast<int>(stack.size()) - 1 >= d[s][t]) return;
                for (NodeId w = 0; w < n; ++w) {
                    if (!adj[v][w] || on[w]) continue;
                    on[w] = true;
                    stack.push_back(w);
                    walk(w);
                    stack.pop_back();
                    on[w] = false;
                }
            };
            walk(s);
            for (std::size_t v = 0; v < n; ++v) score[v] += through[v] / total;
        }
    }
    if (n < 3) return std::vector<double>(n, 0.0);
    const double pairs = static_cast<double>((n - 1) * (n - 2)) / 2.0;
    for (double& x : score) x /= pairs;
    return score;
}

std::set<std::pair<NodeId, NodeId>> edge_set(const Graph& g) {
    std::set<std::pair<NodeId, NodeId>> out;
    for (const Edge& e : g.edges()) out.emplace(e.u, e.v);
    return out;
}

std::vector<std::set<std::pair<NodeId, NodeId>>> spanning_trees(const Graph& g) {
    const auto edges = g.edges();
    const std::size_t n = g.node_count();
    const std::size_t m = edges.size();
    std::vector<std::set<std::pair<NodeId, NodeId>>> out;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
        std::vector<std::pair<NodeId, NodeId>> chosen;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1U << i)) chosen.emplace_back(edges[i].u, edges[i].v);
        const Graph candidate = from_pairs(n, chosen);
        const auto levels = bfs_levels(candidate, 0);
        if (std::all_of(levels.begin(), levels.end(), [](int x) { return x < kInf; })) {
            out.emplace_back(chosen.begin(), chosen.end());
        }
    }
    return out;
}

std::vector<std::uint64_t> zeta_samples(std::size_t count, double gamma, std::uint64_t k_min, std::uint64_t seed) {
    // normaliser: direct sum to K plus Euler-Maclaurin tail of the remainder
    constexpr std::uint64_t kTable = 2'000'000;
    std::vector<double> cdf;
    cdf.reserve(kTable);
    double partial = 0.0;
    for (std::uint64_t k = k_min; k < k_min + kTable; ++k) {
        partial += std::pow(static_cast<double>(k), -gamma);
        cdf.push_back(partial);
    }
    const double a = static_cast<double>(k_min + kTable);
    const double tail = std::pow(a, 1.0 - gamma) / (gamma - 1.0) + 0.5 * std::pow(a, -gamma) +
                        gamma / 12.0 * std::pow(a, -gamma - 1.0);
    const double norm = partial + tail;
    for (double& c : cdf) c /= norm;

    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = unit(rng);
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            // beyond the table: continuous tail inversion
            const double v = unit(rng);
            out.push_back(static_cast<std::uint64_t>(a * std::pow(1.0 - v, -1.0 / (gamma - 1.0))));
        } else {
            out.push_back(k_min + static_cast<std::uint64_t>(it - cdf.begin()));
        }
    }
    return out;
}

std::vector<std::uint64_t> geometric_samples(std::size_t count, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e0ULL);
    std::geometric_distribution<std::uint64_t> geo(p);
    std::vector<std::uint64_t> out(count);
    for (auto& x : out) x = geo(rng) + 1;
    return out;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

std::vector<int> tree_parents(const Graph& tree, NodeId root) {
    const std::size_t n = tree.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (const Edge& e : tree.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> parent(n, -2);
    parent[root] = -1;
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : adj[v]) {
            if (parent[w] == -2) {
                parent[w] = static_cast<int>(v);
                stack.push_back(w);
            }
        }
    }
    return parent;
}

}  // namespace oracle
