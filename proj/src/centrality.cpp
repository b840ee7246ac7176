#include "sptree/centrality.hpp"

#include <algorithm>

#include "sptree/error.hpp"
#include "sptree/metrics.hpp"
#include "sptree/parallel.hpp"

namespace sptree {

namespace {

void require_pairs(const Graph& g) {
    if (g.node_count() < 2) throw InvalidArgument("centrality needs at least two nodes");
}

void require_connected(const Graph& g) {
    require_pairs(g);
    const auto labels = component_labels(g);
    const auto it = std::find_if(labels.begin(), labels.end(), [](std::size_t c) { return c != 0; });
    if (it != labels.end()) throw DisconnectedGraph(static_cast<std::size_t>(it - labels.begin()));
}

}  // namespace

std::string_view to_string(Measure measure) noexcept {
    switch (measure) {
        case Measure::degree: return "dc";
        case Measure::closeness: return "cc";
        case Measure::betweenness: return "bc";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view name) noexcept {
    if (name == "dc" || name == "degree") return Measure::degree;
    if (name == "cc" || name == "closeness") return Measure::closeness;
    if (name == "bc" || name == "betweenness") return Measure::betweenness;
    return std::nullopt;
}

CentralityVector degree_centrality(const Graph& g) {
    require_pairs(g);
    const double scale = 1.0 / static_cast<double>(g.node_count() - 1);
    CentralityVector out{Measure::degree, std::vector<double>(g.node_count()), g.fingerprint()};
    for (NodeId v = 0; v < g.node_count(); ++v) out.values[v] = static_cast<double>(g.degree(v)) * scale;
    return out;
}

CentralityVector closeness_centrality(const Graph& g, std::size_t threads) {
    require_connected(g);
    const std::size_t n = g.node_count();
    CentralityVector out{Measure::closeness, std::vector<double>(n), g.fingerprint()};
    parallel_chunks(n, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto dist = sssp_bfs(g, static_cast<NodeId>(i));
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) sum += 1.0 / static_cast<double>(dist[j]);
            }
            out.values[i] = sum / static_cast<double>(n - 1);
        }
    });
    return out;
}

CentralityVector betweenness_centrality(const Graph& g, std::size_t threads) {
    require_connected(g);
    const std::size_t n = g.node_count();
    std::vector<std::vector<double>> partial(chunk_count(n, threads), std::vector<double>(n, 0.0));

    parallel_chunks(n, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<double>& score = partial[chunk];
        std::vector<Distance> dist(n);
        std::vector<double> paths(n);
        std::vector<double> dependency(n);
        std::vector<NodeId> order;
        order.reserve(n);
        for (std::size_t s = begin; s < end; ++s) {
            std::fill(dist.begin(), dist.end(), kUnreachable);
            std::fill(paths.begin(), paths.end(), 0.0);
            std::fill(dependency.begin(), dependency.end(), 0.0);
            order.clear();
            dist[s] = 0;
            paths[s] = 1.0;
            order.push_back(static_cast<NodeId>(s));
            for (std::size_t head = 0; head < order.size(); ++head) {
                const NodeId v = order[head];
                for (NodeId w : g.neighbors(v)) {
                    if (dist[w] == kUnreachable) {
                        dist[w] = dist[v] + 1;
                        order.push_back(w);
                    }
                    if (dist[w] == dist[v] + 1) paths[w] += paths[v];
                }
            }
            // predecessors of w are exactly its neighbours one level closer
            for (std::size_t k = order.size(); k-- > 1;) {
                const NodeId w = order[k];
                const double share = (1.0 + dependency[w]) / paths[w];
                for (NodeId v : g.neighbors(w)) {
                    if (dist[v] + 1 == dist[w]) dependency[v] += paths[v] * share;
                }
                score[w] += dependency[w];
            }
        }
    });

    CentralityVector out{Measure::betweenness, std::vector<double>(n, 0.0), g.fingerprint()};
    if (n < 3) return out;
    // each unordered pair is counted from both ends
    const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (const auto& p : partial) {
        for (std::size_t v = 0; v < n; ++v) out.values[v] += p[v];
    }
    for (double& x : out.values) x /= pairs;
    return out;
}

CentralityVector centrality(const Graph& g, Measure measure, std::size_t threads) {
    switch (measure) {
        case Measure::degree: return degree_centrality(g);
        case Measure::closeness: return closeness_centrality(g, threads);
        case Measure::betweenness: return betweenness_centrality(g, threads);
    }
    throw InvalidArgument("unknown centrality measure");
}

}  // namespace sptree
