#include "sptree/stats_fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sptree/error.hpp"
#include "sptree/rng.hpp"

namespace sptree {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("pearson: vectors differ in length");
    if (x.size() < 2) throw InvalidArgument("pearson: need at least two samples");
    auto constant = [](std::span<const double> v) {
        return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
    };
    if (constant(x) || constant(y)) throw InvalidArgument("pearson: correlation undefined for a constant vector");
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw InvalidArgument("pearson: correlation undefined for a constant vector");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationReport tree_centrality_correlation(const Graph& g, TreeAlgorithm algorithm, Measure measure,
                                              std::size_t realizations, std::uint64_t seed,
                                              std::size_t threads, const std::string& network_id) {
    if (realizations == 0) throw InvalidArgument("correlation needs at least one realization");
    const CentralityVector on_graph = centrality(g, measure, threads);

    CorrelationReport report;
    report.measure = measure;
    report.algorithm = algorithm;
    report.realizations = realizations;
    report.seed = seed;
    report.samples.reserve(realizations);
    for (std::size_t i = 0; i < realizations; ++i) {
        const SpanningTree t = spanning_tree(g, algorithm, derive_seed(seed, i));
        const CentralityVector on_tree = centrality(t.tree, measure, threads);
        report.samples.push_back(pearson(on_graph.values, on_tree.values));
    }
    double sum = 0.0;
    for (double r : report.samples) sum += r;
    report.r = sum / static_cast<double>(realizations);
    report.per_network.emplace_back(network_id, report.r);
    return report;
}

std::vector<std::pair<std::size_t, double>> degree_histogram(const Graph& g) {
    std::map<std::size_t, std::size_t> counts;
    for (NodeId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(counts.size());
    const auto n = static_cast<double>(g.node_count());
    for (const auto& [k, c] : counts) out.emplace_back(k, static_cast<double>(c) / n);
    return out;
}

}  // namespace sptree
