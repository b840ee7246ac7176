#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sptree/graph.hpp"

namespace sptree {

enum class Measure { degree, closeness, betweenness };

std::string_view to_string(Measure measure) noexcept;  // dc, cc, bc
std::optional<Measure> parse_measure(std::string_view name) noexcept;

struct CentralityVector {
    Measure measure = Measure::degree;
    std::vector<double> values;
    std::uint64_t graph_fingerprint = 0;
};

/// degree(i) / (n - 1). Needs n >= 2.
CentralityVector degree_centrality(const Graph& g);

/// Mean reciprocal distance, (1 / (n - 1)) * sum_{j != i} 1 / d_ij.
/// Connected graphs with n >= 2 only.
CentralityVector closeness_centrality(const Graph& g, std::size_t threads = 1);

/// Brandes dependency accumulation, endpoints excluded, divided by the
/// number of unordered pairs not involving the node, (n - 1)(n - 2) / 2.
/// Path counts are doubles. Connected graphs with n >= 2 only; all zero for
/// n = 2.
CentralityVector betweenness_centrality(const Graph& g, std::size_t threads = 1);

CentralityVector centrality(const Graph& g, Measure measure, std::size_t threads = 1);

}  // namespace sptree
