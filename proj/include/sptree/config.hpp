#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sptree/centrality.hpp"
#include "sptree/generators.hpp"
#include "sptree/spanning.hpp"

namespace sptree {

enum class ExperimentKind { scaling_synthetic, collection_real, correlation };

/// A row subject: the graph itself or one of the tree algorithms.
enum class Method { graph, prim, kruskal, bfs, dfs };

enum class MetricMode { automatic, exact, sampled };

std::string_view to_string(ExperimentKind kind) noexcept;
std::string_view to_string(Method method) noexcept;
std::string_view to_string(MetricMode mode) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;
std::optional<TreeAlgorithm> tree_algorithm(Method method) noexcept;

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::scaling_synthetic;
    std::optional<Family> family;
    std::filesystem::path input_dir;
    std::vector<std::size_t> ladder;
    double k_avg = 10.0;
    std::vector<Method> methods{Method::graph, Method::prim, Method::kruskal, Method::bfs};
    std::size_t realizations = 100;
    std::uint64_t seed = 0;
    MetricMode metric_mode = MetricMode::automatic;
    std::size_t sources = 256;
    std::vector<Measure> measures{Measure::degree, Measure::closeness, Measure::betweenness};
    bool fit_degrees = false;
    std::size_t bootstraps = 100;
    std::size_t threads = 0;

    /// Throws InvalidArgument when the fields are inconsistent with `kind`.
    void validate() const;
};

/// Reads a flat TOML document: `key = value` lines with strings, integers,
/// floats, booleans and single-line arrays of those; '#' starts a comment.
/// Tables are not supported. Unknown keys are rejected. When `realizations`
/// is absent it defaults to 100, or 25 for correlation runs.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

}  // namespace sptree
