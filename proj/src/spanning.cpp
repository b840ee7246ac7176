#include "sptree/spanning.hpp"

#include <algorithm>
#include <vector>

#include "sptree/disjoint_set.hpp"
#include "sptree/error.hpp"
#include "sptree/rng.hpp"

namespace sptree {

namespace {

void require_nonempty(const Graph& g) {
    if (g.node_count() == 0) throw InvalidArgument("spanning tree of an empty graph");
}

NodeId random_node(const Graph& g, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, g.node_count() - 1);
    return static_cast<NodeId>(pick(rng));
}

[[noreturn]] void throw_first_unvisited(const std::vector<char>& visited) {
    const auto it = std::find(visited.begin(), visited.end(), 0);
    throw DisconnectedGraph(static_cast<std::size_t>(it - visited.begin()));
}

SpanningTree make_tree(const Graph& g, const std::vector<Edge>& edges, std::optional<NodeId> root,
                       TreeAlgorithm algorithm, std::uint64_t seed) {
    return SpanningTree{Graph::from_edges(g.node_count(), edges), g.fingerprint(), root, algorithm, seed};
}

/// Adjacency rows copied and shuffled independently.
struct ShuffledAdjacency {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> targets;

    ShuffledAdjacency(const Graph& g, Rng& rng) : offsets(g.node_count() + 1, 0) {
        targets.reserve(2 * g.edge_count());
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto row = g.neighbors(v);
            targets.insert(targets.end(), row.begin(), row.end());
            offsets[v + 1] = targets.size();
            std::shuffle(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]), targets.end(), rng);
        }
    }

    std::span<const NodeId> row(NodeId v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
};

}  // namespace

std::string_view to_string(TreeAlgorithm algorithm) noexcept {
    switch (algorithm) {
        case TreeAlgorithm::prim: return "prim";
        case TreeAlgorithm::kruskal: return "kruskal";
        case TreeAlgorithm::bfs: return "bfs";
        case TreeAlgorithm::dfs: return "dfs";
    }
    return "?";
}

std::optional<TreeAlgorithm> parse_tree_algorithm(std::string_view name) noexcept {
    if (name == "prim") return TreeAlgorithm::prim;
    if (name == "kruskal") return TreeAlgorithm::kruskal;
    if (name == "bfs") return TreeAlgorithm::bfs;
    if (name == "dfs") return TreeAlgorithm::dfs;
    return std::nullopt;
}

SpanningTree prim(const Graph& g, std::uint64_t seed) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    Rng rng(seed);
    std::vector<char> visited(n, 0);
    std::vector<Edge> tree;
    tree.reserve(n - 1);
    // candidate edges (visited, far); an edge enters once, when its first endpoint is visited
    std::vector<Edge> pool;

    auto visit = [&](NodeId v) {
        visited[v] = 1;
        for (NodeId w : g.neighbors(v)) {
            if (!visited[w]) pool.push_back({v, w});
        }
    };

    const NodeId root = random_node(g, rng);
    visit(root);
    while (tree.size() + 1 < n) {
        if (pool.empty()) throw_first_unvisited(visited);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const std::size_t index = pick(rng);
        const Edge candidate = pool[index];
        pool[index] = pool.back();
        pool.pop_back();
        if (visited[candidate.v]) continue;
        tree.push_back(candidate);
        visit(candidate.v);
    }
    return make_tree(g, tree, root, TreeAlgorithm::prim, seed);
}

SpanningTree kruskal(const Graph& g, std::uint64_t seed) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    Rng rng(seed);
    std::vector<Edge> order = g.edges();
    std::shuffle(order.begin(), order.end(), rng);

    DisjointSet sets(n);
    std::vector<Edge> tree;
    tree.reserve(n - 1);
    for (const Edge& e : order) {
        if (tree.size() + 1 == n) break;
        if (sets.unite(e.u, e.v)) tree.push_back(e);
    }
    if (tree.size() + 1 != n) {
        const NodeId anchor = sets.find(0);
        for (NodeId v = 1; v < n; ++v) {
            if (sets.find(v) != anchor) throw DisconnectedGraph(v);
        }
    }
    return make_tree(g, tree, std::nullopt, TreeAlgorithm::kruskal, seed);
}

SpanningTree bfs_tree(const Graph& g, std::uint64_t seed) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    Rng rng(seed);
    const NodeId root = random_node(g, rng);
    const ShuffledAdjacency adjacency(g, rng);

    std::vector<char> visited(n, 0);
    std::vector<Edge> tree;
    tree.reserve(n - 1);
    std::vector<NodeId> queue;
    queue.reserve(n);
    visited[root] = 1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (NodeId w : adjacency.row(v)) {
            if (visited[w]) continue;
            visited[w] = 1;
            tree.push_back({v, w});
            queue.push_back(w);
        }
    }
    if (queue.size() != n) throw_first_unvisited(visited);
    return make_tree(g, tree, root, TreeAlgorithm::bfs, seed);
}

SpanningTree dfs_tree(const Graph& g, std::uint64_t seed) {
    require_nonempty(g);
    const std::size_t n = g.node_count();
    Rng rng(seed);
    const NodeId root = random_node(g, rng);
    const ShuffledAdjacency adjacency(g, rng);

    struct Frame {
        NodeId node;
        std::size_t next;
    };
    std::vector<char> visited(n, 0);
    std::vector<Edge> tree;
    tree.reserve(n - 1);
    std::vector<Frame> stack;
    visited[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto row = adjacency.row(top.node);
        if (top.next == row.size()) {
            stack.pop_back();
            continue;
        }
        const NodeId v = top.node;
        const NodeId w = row[top.next++];
        if (visited[w]) continue;
        visited[w] = 1;
        tree.push_back({v, w});
        stack.push_back({w, 0});
    }
    if (tree.size() + 1 != n) throw_first_unvisited(visited);
    return make_tree(g, tree, root, TreeAlgorithm::dfs, seed);
}

SpanningTree spanning_tree(const Graph& g, TreeAlgorithm algorithm, std::uint64_t seed) {
    switch (algorithm) {
        case TreeAlgorithm::prim: return prim(g, seed);
        case TreeAlgorithm::kruskal: return kruskal(g, seed);
        case TreeAlgorithm::bfs: return bfs_tree(g, seed);
        case TreeAlgorithm::dfs: return dfs_tree(g, seed);
    }
    throw InvalidArgument("unknown tree algorithm");
}

std::string_view to_string(TreeViolation violation) noexcept {
    switch (violation) {
        case TreeViolation::none: return "pass";
        case TreeViolation::node_count: return "node-count violation";
        case TreeViolation::edge_count: return "edge-count violation";
        case TreeViolation::edge_subset: return "edge-subset violation";
        case TreeViolation::cycle: return "cycle violation";
        case TreeViolation::disconnected: return "connectivity violation";
    }
    return "?";
}

TreeVerdict verify_spanning_tree(const Graph& g, const SpanningTree& t) {
    const Graph& tree = t.tree;
    const std::size_t n = g.node_count();
    if (tree.node_count() != n) {
        return {TreeViolation::node_count,
                "tree has " + std::to_string(tree.node_count()) + " nodes, graph has " + std::to_string(n)};
    }
    // m = n - 1 is the same statement as <k> = 2 - 2/n, checked in integers
    if (n > 0 && 2 * tree.edge_count() != 2 * n - 2) {
        return {TreeViolation::edge_count,
                "tree has " + std::to_string(tree.edge_count()) + " edges, expected " + std::to_string(n - 1)};
    }
    if (n == 0 && tree.edge_count() != 0) return {TreeViolation::edge_count, "empty graph with edges"};

    const auto edges = tree.edges();
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) {
            return {TreeViolation::edge_subset,
                    "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not in the graph"};
        }
    }

    DisjointSet sets(n);
    for (const Edge& e : edges) {
        if (!sets.unite(e.u, e.v)) {
            return {TreeViolation::cycle,
                    "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") closes a cycle"};
        }
    }

    if (!is_connected(tree)) {
        const auto labels = component_labels(tree);
        const auto it = std::find_if(labels.begin(), labels.end(), [](std::size_t c) { return c != 0; });
        return {TreeViolation::disconnected,
                "node " + std::to_string(it - labels.begin()) + " is not reachable from node 0"};
    }
    return {};
}

}  // namespace sptree
