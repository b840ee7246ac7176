#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sptree/graph.hpp"

namespace sptree {

/// Union by rank with full path compression. On equal rank the lower id
/// becomes the root.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n);

    NodeId find(NodeId x);

    /// Merges the sets of a and b; returns false if they were already joined.
    bool unite(NodeId a, NodeId b);

    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t component_count() const noexcept { return components_; }

private:
    std::vector<NodeId> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_;
};

}  // namespace sptree
