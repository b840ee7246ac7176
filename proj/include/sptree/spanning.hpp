#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sptree/graph.hpp"

namespace sptree {

enum class TreeAlgorithm { prim, kruskal, bfs, dfs };

std::string_view to_string(TreeAlgorithm algorithm) noexcept;
std::optional<TreeAlgorithm> parse_tree_algorithm(std::string_view name) noexcept;

struct SpanningTree {
    Graph tree;
    std::uint64_t parent_fingerprint = 0;
    std::optional<NodeId> root;  // absent for Kruskal
    TreeAlgorithm algorithm = TreeAlgorithm::bfs;
    std::uint64_t seed = 0;
};

// All four algorithms throw DisconnectedGraph on a disconnected input and
// InvalidArgument on the empty graph. The result is a pure function of
// (g, seed).

/// Grows from a uniform seed node, adding a uniformly random frontier edge
/// each step. The frontier is an array of candidate edges sampled by index;
/// stale candidates (far endpoint already visited) are swap-removed when hit.
SpanningTree prim(const Graph& g, std::uint64_t seed);

/// Scans the edges in a uniformly random order and keeps those that join two
/// different components.
SpanningTree kruskal(const Graph& g, std::uint64_t seed);

/// Breadth-first traversal from a uniform root; each adjacency row is visited
/// in a seeded random order.
SpanningTree bfs_tree(const Graph& g, std::uint64_t seed);

/// Depth-first (preorder) traversal from a uniform root with seeded
/// neighbour order. Non-tree edges always join an ancestor and a descendant.
SpanningTree dfs_tree(const Graph& g, std::uint64_t seed);

SpanningTree spanning_tree(const Graph& g, TreeAlgorithm algorithm, std::uint64_t seed);

enum class TreeViolation {
    none,
    node_count,
    edge_count,
    edge_subset,
    cycle,
    disconnected,
};

std::string_view to_string(TreeViolation violation) noexcept;

struct TreeVerdict {
    TreeViolation violation = TreeViolation::none;
    std::string detail;

    bool ok() const noexcept { return violation == TreeViolation::none; }
};

/// Checks node count, edge count (n - 1, hence average degree 2 - 2/n),
/// edge subset, acyclicity (union-find) and connectivity (traversal), in that
/// order, and reports the first failure.
TreeVerdict verify_spanning_tree(const Graph& g, const SpanningTree& t);

}  // namespace sptree
