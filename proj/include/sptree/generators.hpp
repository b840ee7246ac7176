#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sptree/graph.hpp"

namespace sptree {

enum class Family { erdos_renyi, barabasi_albert, triangular_lattice };

std::string_view to_string(Family family) noexcept;
/// Accepts the long names and the CLI shorthands er, ba, tri.
std::optional<Family> parse_family(std::string_view name) noexcept;

struct GenSpec {
    Family family = Family::erdos_renyi;
    std::size_t n = 0;
    double k_avg = 10.0;
    std::uint64_t seed = 0;
};

/// G(n, p) with p = k_avg / (n - 1). Pairs are drawn by one Bernoulli trial
/// each up to n = 10^4 and by geometric skipping above; the result may be
/// disconnected.
Graph erdos_renyi(std::size_t n, double k_avg, std::uint64_t seed);

/// Preferential attachment with m_a = k_avg / 2 links per new node, grown
/// from a clique on m_a + 1 nodes. k_avg must be an even integer >= 2.
Graph barabasi_albert(std::size_t n, double k_avg, std::uint64_t seed);

/// Non-periodic L x L triangular lattice with L = floor(sqrt(n)). Node
/// (r, c) = r * L + c links to (r, c+1), (r+1, c) and (r+1, c+1).
Graph triangular_lattice(std::size_t n);

/// Dispatches on spec.family; the lattice ignores k_avg and seed.
Graph generate(const GenSpec& spec);

}  // namespace sptree
