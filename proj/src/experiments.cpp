#include "sptree/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "sptree/error.hpp"
#include "sptree/parallel.hpp"
#include "sptree/rng.hpp"
#include "sptree/stats_fit.hpp"
#include "sptree/version.hpp"

namespace sptree {

namespace fs = std::filesystem;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::uint64_t cell_seed(std::uint64_t base, const std::string& subject, std::string_view method, std::size_t size,
                        std::size_t realization) {
    return derive_seed(base, hash_string(subject), hash_string(method), size, realization);
}

namespace {

struct CellOutput {
    std::vector<ExperimentRecord> records;
    std::vector<SkippedCell> skipped;
};

DistanceStats measure(const Graph& g, const ExperimentConfig& cfg, std::uint64_t sample_seed) {
    switch (cfg.metric_mode) {
        case MetricMode::exact: return distance_stats_exact(g);
        case MetricMode::sampled: return distance_stats_sampled(g, std::min(cfg.sources, g.node_count()), sample_seed);
        case MetricMode::automatic: break;
    }
    return distance_stats(g, sample_seed);
}

ExperimentRecord make_record(const Graph& g, const ExperimentConfig& cfg, const std::string& subject,
                             std::size_t size, Method method, std::size_t realization, std::uint64_t seed,
                             std::uint64_t sample_seed) {
    ExperimentRecord rec;
    rec.subject = subject;
    rec.size = size;
    rec.n = g.node_count();
    rec.m = g.edge_count();
    rec.method = method;
    rec.realization = realization;
    rec.seed = seed;
    rec.stats = measure(g, cfg, sample_seed);
    if (cfg.fit_degrees) {
        std::vector<std::uint64_t> degrees;
        degrees.reserve(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) degrees.push_back(g.degree(v));
        try {
            const auto fit = fit_power_law(degrees, cfg.bootstraps, derive_seed(seed, 0x706c66ULL));
            rec.gamma = fit.gamma;
            rec.p_value = fit.p_value;
        } catch (const InvalidArgument&) {
            // no tail to fit (e.g. a path); leave the columns empty
        }
    }
    return rec;
}

/// Graph record (if requested) plus one record per tree algorithm for one
/// realization of `g`. All records share the distance-sampling seed, so
/// sampled tree distances are measured from the same sources as the graph's.
void measure_realization(const Graph& g, const ExperimentConfig& cfg, const std::string& subject, std::size_t size,
                         std::size_t realization, std::uint64_t graph_seed, CellOutput& out,
                         const std::optional<ExperimentRecord>& cached_graph = std::nullopt) {
    const std::uint64_t sample_seed = cell_seed(cfg.seed, subject, "sample", size, realization);
    for (Method method : cfg.methods) {
        try {
            if (method == Method::graph) {
                if (cached_graph) {
                    ExperimentRecord rec = *cached_graph;
                    rec.realization = realization;
                    out.records.push_back(std::move(rec));
                } else {
                    out.records.push_back(
                        make_record(g, cfg, subject, size, method, realization, graph_seed, sample_seed));
                }
                continue;
            }
            const std::uint64_t seed = cell_seed(cfg.seed, subject, to_string(method), size, realization);
            const SpanningTree t = spanning_tree(g, *tree_algorithm(method), seed);
            out.records.push_back(make_record(t.tree, cfg, subject, size, method, realization, seed, sample_seed));
        } catch (const Error& e) {
            out.skipped.push_back({subject, size, method, realization, e.what()});
        }
    }
}

ExperimentTable collect(std::vector<CellOutput>& cells) {
    ExperimentTable table;
    for (auto& cell : cells) {
        std::move(cell.records.begin(), cell.records.end(), std::back_inserter(table.records));
        std::move(cell.skipped.begin(), cell.skipped.end(), std::back_inserter(table.skipped));
    }
    std::stable_sort(table.records.begin(), table.records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.subject, a.size, a.method, a.realization) <
               std::tie(b.subject, b.size, b.method, b.realization);
    });
    return table;
}

std::vector<fs::path> list_networks(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw Error("input directory not found: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && !name.empty() && name.front() != '.') files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

/// Parses, simplifies and reduces a network file to its largest component.
Graph load_network(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return largest_connected_component(simplify(parse_edge_list(in)));
}

struct Network {
    std::string name;
    Graph graph;
};

}  // namespace

ExperimentTable run_scaling(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!cfg.family) throw InvalidArgument("scaling run needs a family");
    const std::string subject(to_string(*cfg.family));
    const std::size_t cells = cfg.ladder.size() * cfg.realizations;
    std::vector<CellOutput> outputs(cells);
    parallel_tasks(cells, cfg.threads, [&](std::size_t index) {
        const std::size_t size = cfg.ladder[index / cfg.realizations];
        const std::size_t realization = index % cfg.realizations;
        const std::uint64_t graph_seed = cell_seed(cfg.seed, subject, "graph", size, realization);
        CellOutput& out = outputs[index];
        Graph g;
        try {
            g = largest_connected_component(generate(GenSpec{*cfg.family, size, cfg.k_avg, graph_seed}));
        } catch (const Error& e) {
            out.skipped.push_back({subject, size, std::nullopt, realization, e.what()});
            return;
        }
        measure_realization(g, cfg, subject, size, realization, graph_seed, out);
    });
    return collect(outputs);
}

ExperimentTable run_collection(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto files = list_networks(cfg.input_dir);
    std::vector<CellOutput> outputs(files.size());
    parallel_tasks(files.size(), cfg.threads, [&](std::size_t index) {
        const std::string subject = files[index].stem().string();
        CellOutput& out = outputs[index];
        Graph g;
        try {
            g = load_network(files[index]);
        } catch (const Error& e) {
            out.skipped.push_back({subject, 0, std::nullopt, std::nullopt, std::string("unreadable: ") + e.what()});
            return;
        }
        if (g.node_count() < 2) {
            out.skipped.push_back({subject, g.node_count(), std::nullopt, std::nullopt,
                                   "degenerate: largest component has fewer than 2 nodes"});
            return;
        }
        const std::size_t size = g.node_count();
        // the graph is fixed, so its record is measured once and repeated per realization
        std::optional<ExperimentRecord> graph_record;
        if (std::find(cfg.methods.begin(), cfg.methods.end(), Method::graph) != cfg.methods.end()) {
            try {
                graph_record = make_record(g, cfg, subject, size, Method::graph, 0, 0,
                                           cell_seed(cfg.seed, subject, "sample", size, 0));
            } catch (const Error& e) {
                out.skipped.push_back({subject, size, Method::graph, std::nullopt, e.what()});
            }
        }
        ExperimentConfig per_cell = cfg;
        if (!graph_record) {
            std::erase(per_cell.methods, Method::graph);
        }
        for (std::size_t r = 0; r < cfg.realizations; ++r) {
            measure_realization(g, per_cell, subject, size, r, 0, out, graph_record);
        }
    });
    return collect(outputs);
}

std::vector<CorrelationCell> run_correlation(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<Network> networks;
    if (!cfg.input_dir.empty()) {
        for (const auto& path : list_networks(cfg.input_dir)) {
            try {
                networks.push_back({path.stem().string(), load_network(path)});
            } catch (const Error& e) {
                std::cerr << "skipping " << path.string() << ": " << e.what() << '\n';
            }
        }
    } else {
        const std::string family(to_string(*cfg.family));
        for (std::size_t size : cfg.ladder) {
            const auto seed = cell_seed(cfg.seed, family, "graph", size, 0);
            networks.push_back({family + "-" + std::to_string(size),
                                largest_connected_component(generate(GenSpec{*cfg.family, size, cfg.k_avg, seed}))});
        }
    }

    std::vector<Method> trees;
    for (Method m : cfg.methods) {
        if (m != Method::graph) trees.push_back(m);
    }
    std::vector<CorrelationCell> cells;
    for (const auto& net : networks) {
        for (Method method : trees) {
            for (Measure measure : cfg.measures) {
                cells.push_back({net.name, net.graph.node_count(), net.graph.edge_count(), method, measure,
                                 std::nullopt, cfg.realizations});
            }
        }
    }
    const std::size_t per_network = trees.size() * cfg.measures.size();
    parallel_tasks(cells.size(), cfg.threads, [&](std::size_t index) {
        CorrelationCell& cell = cells[index];
        const Graph& g = networks[index / per_network].graph;
        // same trees for every measure of a (network, algorithm) pair
        const auto seed = cell_seed(cfg.seed, cell.network, to_string(cell.method), cell.n, 0);
        try {
            cell.r = tree_centrality_correlation(g, *tree_algorithm(cell.method), cell.measure, cfg.realizations,
                                                 seed, 1, cell.network)
                         .r;
        } catch (const InvalidArgument&) {
            cell.r.reset();
        }
    });
    return cells;
}

std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records) {
    using Key = std::tuple<std::string, std::size_t, Method>;
    std::map<Key, std::vector<const ExperimentRecord*>> groups;
    for (const auto& rec : records) groups[{rec.subject, rec.size, rec.method}].push_back(&rec);

    auto moments = [](const std::vector<double>& xs) {
        AggregateRow::Moments mo;
        const auto count = static_cast<double>(xs.size());
        for (double x : xs) mo.mean += x;
        mo.mean /= count;
        if (xs.size() > 1) {
            double ss = 0.0;
            for (double x : xs) ss += (x - mo.mean) * (x - mo.mean);
            mo.stddev = std::sqrt(ss / (count - 1.0));
            mo.stderr_ = mo.stddev / std::sqrt(count);
        }
        return mo;
    };

    std::vector<AggregateRow> rows;
    for (const auto& [key, group] : groups) {
        AggregateRow row;
        std::tie(row.subject, row.size, row.method) = key;
        row.count = group.size();
        std::vector<double> d_avg, d_max, c_d;
        for (const auto* rec : group) {
            row.n += static_cast<double>(rec->n);
            row.m += static_cast<double>(rec->m);
            d_avg.push_back(rec->stats.d_avg);
            d_max.push_back(static_cast<double>(rec->stats.d_max));
            c_d.push_back(rec->stats.c_d);
        }
        row.n /= static_cast<double>(row.count);
        row.m /= static_cast<double>(row.count);
        row.d_avg = moments(d_avg);
        row.d_max = moments(d_max);
        row.c_d = moments(c_d);
        rows.push_back(std::move(row));
    }
    return rows;
}

CollectionSummary summarize_collection(const std::vector<ExperimentRecord>& records) {
    CollectionSummary s;
    std::map<std::string, const ExperimentRecord*> per_network;
    for (const auto& rec : records) {
        if (rec.method == Method::graph) per_network.emplace(rec.subject, &rec);
    }
    bool first = true;
    for (const auto& [name, rec] : per_network) {
        const double k = 2.0 * static_cast<double>(rec->m) / static_cast<double>(rec->n);
        const double d = rec->stats.d_avg;
        if (first) {
            s.n_min = s.n_max = rec->n;
            s.m_min = s.m_max = rec->m;
            s.k_min = s.k_max = k;
            s.d_min = s.d_max = d;
            first = false;
        }
        s.n_min = std::min(s.n_min, rec->n);
        s.n_max = std::max(s.n_max, rec->n);
        s.m_min = std::min(s.m_min, rec->m);
        s.m_max = std::max(s.m_max, rec->m);
        s.k_min = std::min(s.k_min, k);
        s.k_max = std::max(s.k_max, k);
        s.d_min = std::min(s.d_min, d);
        s.d_max = std::max(s.d_max, d);
    }
    s.networks = per_network.size();
    return s;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << "subject,size,n,m,algorithm,realization,seed,d_avg,d_max,d_std,c_d,mode,sources,n_pairs,gamma,p_value\n";
    for (const auto& r : records) {
        out << r.subject << ',' << r.size << ',' << r.n << ',' << r.m << ',' << to_string(r.method) << ','
            << r.realization << ',' << r.seed << ',' << format_double(r.stats.d_avg) << ',' << r.stats.d_max << ','
            << format_double(r.stats.d_std) << ',' << format_double(r.stats.c_d) << ',' << to_string(r.stats.mode)
            << ',' << r.stats.sources << ',' << r.stats.n_pairs << ','
            << (r.gamma ? format_double(*r.gamma) : "") << ',' << (r.p_value ? format_double(*r.p_value) : "")
            << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
    out << "subject,size,algorithm,count,n,m";
    for (const char* name : {"d_avg", "d_max", "c_d"}) {
        out << ',' << name << "_mean," << name << "_stddev," << name << "_stderr";
    }
    out << '\n';
    for (const auto& row : rows) {
        out << row.subject << ',' << row.size << ',' << to_string(row.method) << ',' << row.count << ','
            << format_double(row.n) << ',' << format_double(row.m);
        for (const auto* mo : {&row.d_avg, &row.d_max, &row.c_d}) {
            out << ',' << format_double(mo->mean) << ',' << format_double(mo->stddev) << ','
                << format_double(mo->stderr_);
        }
        out << '\n';
    }
}

void write_correlation_csv(std::ostream& out, const std::vector<CorrelationCell>& cells) {
    out << "network,n,m,algorithm,measure,r,realizations\n";
    for (const auto& c : cells) {
        out << c.network << ',' << c.n << ',' << c.m << ',' << to_string(c.method) << ',' << to_string(c.measure)
            << ',' << (c.r ? format_double(*c.r) : "NA") << ',' << c.realizations << '\n';
    }
}

void write_collection_csv(std::ostream& out, const CollectionSummary& s) {
    out << "networks,n_min,n_max,m_min,m_max,k_min,k_max,d_min,d_max\n";
    out << s.networks << ',' << s.n_min << ',' << s.n_max << ',' << s.m_min << ',' << s.m_max << ','
        << format_double(s.k_min) << ',' << format_double(s.k_max) << ',' << format_double(s.d_min) << ','
        << format_double(s.d_max) << '\n';
}

void run_experiment(const ExperimentConfig& cfg, const fs::path& out_dir) {
    cfg.validate();
    fs::create_directories(out_dir);
    const auto started = std::chrono::steady_clock::now();

    auto open = [&](const char* name) {
        std::ofstream file(out_dir / name);
        if (!file) throw Error("cannot write " + (out_dir / name).string());
        return file;
    };

    nlohmann::json meta;
    meta["tool"] = "sptree";
    meta["version"] = version();
    meta["build"] = build_hash();
    meta["kind"] = to_string(cfg.kind);
    meta["seed"] = cfg.seed;
    meta["realizations"] = cfg.realizations;
    meta["k_avg"] = cfg.k_avg;
    meta["ladder"] = cfg.ladder;
    if (cfg.family) meta["family"] = to_string(*cfg.family);
    if (!cfg.input_dir.empty()) meta["input_dir"] = cfg.input_dir.string();
    meta["metric_mode"] = to_string(cfg.metric_mode);
    meta["threads"] = resolve_threads(cfg.threads);
    auto& algorithms = meta["algorithms"] = nlohmann::json::array();
    for (Method m : cfg.methods) algorithms.push_back(to_string(m));

    if (cfg.kind == ExperimentKind::correlation) {
        const auto cells = run_correlation(cfg);
        auto file = open("correlation.csv");
        write_correlation_csv(file, cells);
        meta["cells"] = cells.size();
    } else {
        const ExperimentTable table =
            cfg.kind == ExperimentKind::scaling_synthetic ? run_scaling(cfg) : run_collection(cfg);
        {
            auto file = open("records.csv");
            write_records_csv(file, table.records);
        }
        {
            auto file = open("aggregate.csv");
            write_aggregate_csv(file, aggregate(table.records));
        }
        if (cfg.kind == ExperimentKind::collection_real) {
            auto file = open("collection.csv");
            write_collection_csv(file, summarize_collection(table.records));
        }
        meta["records"] = table.records.size();
        auto& skipped = meta["skipped"] = nlohmann::json::array();
        for (const auto& s : table.skipped) {
            nlohmann::json entry{{"subject", s.subject}, {"size", s.size}, {"reason", s.reason}};
            if (s.method) entry["algorithm"] = to_string(*s.method);
            if (s.realization) entry["realization"] = *s.realization;
            skipped.push_back(std::move(entry));
            std::cerr << "skipped " << s.subject << ": " << s.reason << '\n';
        }
    }
    meta["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    auto file = open("meta.json");
    file << meta.dump(2) << '\n';
}

}  // namespace sptree
