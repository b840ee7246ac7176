#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sptree/config.hpp"
#include "sptree/metrics.hpp"

namespace sptree {

struct ExperimentRecord {
    std::string subject;  // family name or network file stem
    std::size_t size = 0;  // ladder value; LCC size for real networks
    std::size_t n = 0;
    std::size_t m = 0;
    Method method = Method::graph;
    std::size_t realization = 0;
    std::uint64_t seed = 0;
    DistanceStats stats;
    std::optional<double> gamma;
    std::optional<double> p_value;
};

struct SkippedCell {
    std::string subject;
    std::size_t size = 0;
    std::optional<Method> method;
    std::optional<std::size_t> realization;
    std::string reason;
};

struct ExperimentTable {
    std::vector<ExperimentRecord> records;  // sorted by (subject, size, method, realization)
    std::vector<SkippedCell> skipped;
};

struct AggregateRow {
    std::string subject;
    std::size_t size = 0;
    Method method = Method::graph;
    std::size_t count = 0;
    double n = 0.0;
    double m = 0.0;
    struct Moments {
        double mean = 0.0;
        double stddev = 0.0;  // sample standard deviation
        double stderr_ = 0.0;
    };
    Moments d_avg;
    Moments d_max;
    Moments c_d;
};

/// One row of the real-network summary: ranges over the graph records of a
/// collection, as min/max pairs.
struct CollectionSummary {
    std::size_t networks = 0;
    std::size_t n_min = 0, n_max = 0;
    std::size_t m_min = 0, m_max = 0;
    double k_min = 0.0, k_max = 0.0;
    double d_min = 0.0, d_max = 0.0;
};

struct CorrelationCell {
    std::string network;
    std::size_t n = 0;
    std::size_t m = 0;
    Method method = Method::bfs;
    Measure measure = Measure::closeness;
    std::optional<double> r;  // empty when undefined (constant centrality)
    std::size_t realizations = 0;
};

/// Seed of one (subject, method, size, realization) cell; order independent.
std::uint64_t cell_seed(std::uint64_t base, const std::string& subject, std::string_view method, std::size_t size,
                        std::size_t realization);

ExperimentTable run_scaling(const ExperimentConfig& cfg);
ExperimentTable run_collection(const ExperimentConfig& cfg);
std::vector<CorrelationCell> run_correlation(const ExperimentConfig& cfg);

std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records);
CollectionSummary summarize_collection(const std::vector<ExperimentRecord>& records);

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
void write_correlation_csv(std::ostream& out, const std::vector<CorrelationCell>& cells);
void write_collection_csv(std::ostream& out, const CollectionSummary& summary);

/// Runs the experiment named by cfg.kind and writes records.csv,
/// aggregate.csv (or correlation.csv) and meta.json into out_dir. Collection
/// runs also write collection.csv.
void run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace sptree
