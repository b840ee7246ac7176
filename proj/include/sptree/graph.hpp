#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sptree {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph over dense ids 0..n-1.
///
/// Adjacency is stored in compressed rows with every row sorted, so edge
/// queries are a binary search and serialization is canonical. Construction
/// drops self-loops and merges parallel edges.
class Graph {
public:
    Graph() = default;

    /// Builds the simple graph on `n` nodes spanned by `edges`. Edge endpoints
    /// must be < n. Self-loops and repeated edges are discarded.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId node) const noexcept {
        return {targets_.data() + offsets_[node], targets_.data() + offsets_[node + 1]};
    }
    std::size_t degree(NodeId node) const noexcept { return offsets_[node + 1] - offsets_[node]; }

    bool has_edge(NodeId u, NodeId v) const noexcept;

    /// 2m/n, or 0 for the empty graph.
    double average_degree() const noexcept;

    /// All edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Stable 64-bit hash of the adjacency structure.
    std::uint64_t fingerprint() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Raw edges as read from a file, relabeled onto dense ids.
///
/// Multiplicity and self-loops are preserved; `simplify` removes them.
struct EdgeList {
    std::vector<Edge> edges;
    std::vector<std::string> labels;  // dense id -> raw label
    std::unordered_map<std::string, NodeId> label_map;

    std::size_t node_count() const noexcept { return labels.size(); }

    /// Edge list over ids 0..n-1 whose labels are the decimal ids.
    static EdgeList from_ids(std::size_t n, std::vector<Edge> edges);
};

/// Parses whitespace-separated edge lines. Lines whose first non-blank
/// character is '#' or '%' are comments. Tokens past the second are ignored.
///
/// Labels are assigned dense ids in ascending order: numerically when every
/// label is a non-negative integer, lexicographically otherwise. Throws
/// ParseError on a line with fewer than two tokens or when no edge is found.
EdgeList parse_edge_list(std::istream& in);
EdgeList parse_edge_list(std::string_view text);

Graph simplify(const EdgeList& edges);

/// Connected-component index per node; components are numbered in order of
/// their smallest node id.
std::vector<std::size_t> component_labels(const Graph& g);

bool is_connected(const Graph& g);

/// Nodes of the largest connected component in ascending order. Ties go to
/// the component holding the smallest id. Throws InvalidArgument on n = 0.
std::vector<NodeId> largest_component_nodes(const Graph& g);

/// Subgraph induced by `nodes`, relabeled so nodes[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

Graph largest_connected_component(const Graph& g);

std::vector<std::size_t> degree_sequence(const Graph& g);

/// Canonical serialization: one "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_string(const Graph& g);

}  // namespace sptree
