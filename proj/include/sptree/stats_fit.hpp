#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sptree/centrality.hpp"
#include "sptree/graph.hpp"
#include "sptree/spanning.hpp"

namespace sptree {

/// Product-moment correlation. Throws InvalidArgument on length mismatch,
/// fewer than two samples, or a constant input (the coefficient is undefined).
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationReport {
    Measure measure = Measure::closeness;
    TreeAlgorithm algorithm = TreeAlgorithm::bfs;
    double r = 0.0;  // mean over realizations
    std::size_t realizations = 0;
    std::uint64_t seed = 0;
    std::vector<double> samples;  // r of each realization
    std::vector<std::pair<std::string, double>> per_network;
};

/// For each realization i, builds the tree with seed derive_seed(seed, i),
/// computes `measure` on the graph and on the tree, and correlates the two.
CorrelationReport tree_centrality_correlation(const Graph& g, TreeAlgorithm algorithm, Measure measure,
                                              std::size_t realizations, std::uint64_t seed,
                                              std::size_t threads = 1, const std::string& network_id = "input");

/// (degree, fraction of nodes) for every degree that occurs, ascending.
std::vector<std::pair<std::size_t, double>> degree_histogram(const Graph& g);

inline constexpr double kPlausibilityThreshold = 0.1;
inline constexpr std::size_t kMaxCutoffCandidates = 200;
inline constexpr double kMinTailFraction = 0.1;
inline constexpr std::size_t kLowPowerSamples = 50;
inline constexpr std::size_t kDefaultBootstraps = 100;

/// Discrete power law p_k = k^-gamma / zeta(gamma, k_min) for k >= k_min.
struct TailFit {
    double gamma = 0.0;
    std::uint64_t k_min = 1;
    double ks_stat = 0.0;
    std::size_t n_tail = 0;
};

struct PowerLawFit {
    double gamma = 0.0;
    std::uint64_t k_min = 1;
    double ks_stat = 0.0;
    double p_value = 0.0;
    double p_value_stderr = 0.0;  // binomial, sqrt(p (1 - p) / B)
    std::size_t n_tail = 0;
    std::size_t n_samples = 0;
    std::size_t bootstraps = 0;
    bool plausible = false;  // p_value >= kPlausibilityThreshold
    bool low_power = false;  // fewer than kLowPowerSamples samples
};

/// Maximum-likelihood exponent of the tail k >= k_min.
double power_law_mle(std::span<const std::uint64_t> tail_sorted, std::uint64_t k_min);

/// KS distance between the tail's empirical CDF and the fitted law.
double power_law_ks(std::span<const std::uint64_t> tail_sorted, std::uint64_t k_min, double gamma);

/// Picks k_min among the kMaxCutoffCandidates smallest distinct values
/// (never the largest one) whose tail holds at least kMinTailFraction of the
/// samples, minimising the KS distance. Zero values are ignored. Throws
/// InvalidArgument when fewer than two distinct positive values exist.
TailFit fit_power_law_tail(std::span<const std::uint64_t> samples);

/// fit_power_law_tail plus a semi-parametric bootstrap p-value: each replicate
/// keeps every sample's slot, drawing from the fitted law with probability
/// n_tail / n and from the observed values below k_min otherwise, then refits.
/// Replicate j uses seed derive_seed(seed, j), so the result does not depend
/// on the thread count.
PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, std::size_t bootstraps, std::uint64_t seed,
                          std::size_t threads = 1);

/// log zeta(s, q), the Hurwitz zeta function, for s > 1 and q >= 1.
double log_hurwitz_zeta(double s, double q);

}  // namespace sptree
