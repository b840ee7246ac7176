#include "sptree/generators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sptree/error.hpp"
#include "sptree/rng.hpp"

namespace sptree {

namespace {

constexpr std::size_t kBernoulliLimit = 10'000;

}  // namespace

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::erdos_renyi: return "erdos_renyi";
        case Family::barabasi_albert: return "barabasi_albert";
        case Family::triangular_lattice: return "triangular_lattice";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    if (name == "er" || name == "erdos_renyi") return Family::erdos_renyi;
    if (name == "ba" || name == "barabasi_albert") return Family::barabasi_albert;
    if (name == "tri" || name == "triangular_lattice") return Family::triangular_lattice;
    return std::nullopt;
}

Graph erdos_renyi(std::size_t n, double k_avg, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("erdos_renyi needs n >= 2");
    if (!(k_avg > 0.0) || k_avg > static_cast<double>(n - 1)) {
        throw InvalidArgument("erdos_renyi needs 0 < k_avg <= n - 1");
    }
    const double p = k_avg / static_cast<double>(n - 1);
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.1) + 16);

    if (p >= 1.0) {
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    } else if (n <= kBernoulliLimit) {
        std::bernoulli_distribution coin(p);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
    } else {
        // Batagelj-Brandes skipping over the pairs (v, w), w < v
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double log_q = std::log1p(-p);
        std::int64_t v = 1;
        std::int64_t w = -1;
        const auto nn = static_cast<std::int64_t>(n);
        while (v < nn) {
            const double r = unit(rng);
            w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
            while (w >= v && v < nn) {
                w -= v;
                ++v;
            }
            if (v < nn) edges.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, double k_avg, std::uint64_t seed) {
    if (!(k_avg >= 2.0) || std::floor(k_avg) != k_avg || static_cast<std::uint64_t>(k_avg) % 2 != 0) {
        throw InvalidArgument("barabasi_albert needs an even integer k_avg >= 2");
    }
    const auto links = static_cast<std::size_t>(k_avg) / 2;
    if (n <= links) throw InvalidArgument("barabasi_albert needs n > k_avg / 2");

    std::vector<Edge> edges;
    edges.reserve(links * (links + 1) / 2 + links * (n - links - 1));
    // every edge endpoint once, so a uniform pick is a degree-proportional pick
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    const std::size_t clique = links + 1;
    for (NodeId u = 0; u < clique; ++u) {
        for (NodeId v = u + 1; v < clique; ++v) {
            edges.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    Rng rng(seed);
    std::vector<NodeId> targets;
    targets.reserve(links);
    for (std::size_t node = clique; node < n; ++node) {
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        while (targets.size() < links) {
            const NodeId t = endpoints[pick(rng)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        const auto v = static_cast<NodeId>(node);
        for (NodeId t : targets) {
            edges.push_back({t, v});
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph triangular_lattice(std::size_t n) {
    if (n < 4) throw InvalidArgument("triangular_lattice needs n >= 4");
    auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (side * side > n) --side;
    while ((side + 1) * (side + 1) <= n) ++side;

    std::vector<Edge> edges;
    edges.reserve(3 * side * side);
    auto id = [side](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * side + c); };
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            if (c + 1 < side) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < side) edges.push_back({id(r, c), id(r + 1, c)});
            if (r + 1 < side && c + 1 < side) edges.push_back({id(r, c), id(r + 1, c + 1)});
        }
    }
    return Graph::from_edges(side * side, edges);
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::erdos_renyi: return erdos_renyi(spec.n, spec.k_avg, spec.seed);
        case Family::barabasi_albert: return barabasi_albert(spec.n, spec.k_avg, spec.seed);
        case Family::triangular_lattice: return triangular_lattice(spec.n);
    }
    throw InvalidArgument("unknown graph family");
}

}  // namespace sptree
