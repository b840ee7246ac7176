#include "sptree/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "sptree/centrality.hpp"
#include "sptree/config.hpp"
#include "sptree/error.hpp"
#include "sptree/experiments.hpp"
#include "sptree/generators.hpp"
#include "sptree/metrics.hpp"
#include "sptree/rng.hpp"
#include "sptree/spanning.hpp"
#include "sptree/stats_fit.hpp"
#include "sptree/version.hpp"

namespace sptree {

namespace {

using nlohmann::json;

struct Input {
    EdgeList edges;
    Graph graph;
    std::string name;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    std::size_t threads = 0;
};

Input read_input(Context& ctx, const std::string& path, bool lcc) {
    Input input;
    if (path == "-") {
        input.edges = parse_edge_list(ctx.in);
        input.name = "stdin";
    } else {
        std::ifstream file(path);
        if (!file) throw Error("cannot open " + path);
        input.edges = parse_edge_list(file);
        input.name = std::filesystem::path(path).stem().string();
    }
    input.graph = simplify(input.edges);
    if (lcc) {
        const auto nodes = largest_component_nodes(input.graph);
        if (nodes.size() != input.graph.node_count()) {
            std::vector<std::string> labels;
            labels.reserve(nodes.size());
            for (NodeId v : nodes) labels.push_back(input.edges.labels[v]);
            input.edges.labels = std::move(labels);
            input.graph = induced_subgraph(input.graph, nodes);
        }
    }
    return input;
}

/// Runs `write` against stdout or a file.
template <class Fn>
void emit(Context& ctx, const std::string& path, Fn&& write) {
    if (path == "-") {
        write(ctx.out);
        ctx.out.flush();
        if (!ctx.out) throw Error("write to stdout failed");
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot write " + path);
    write(file);
    file.flush();
    if (!file) throw Error("write to " + path + " failed");
}

std::uint64_t resolve_seed(Context& ctx, const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device device;
    const std::uint64_t generated = (static_cast<std::uint64_t>(device()) << 32) ^ device();
    ctx.err << "seed: " << generated << '\n';
    return generated;
}

json stats_json(const Graph& g, const DistanceStats& s) {
    return json{{"n", g.node_count()},
                {"m", g.edge_count()},
                {"k_avg", g.average_degree()},
                {"d_avg", s.d_avg},
                {"d_max", s.d_max},
                {"d_std", s.d_std},
                {"c_d", s.c_d},
                {"mode", to_string(s.mode)},
                {"sources", s.sources},
                {"n_pairs", s.n_pairs}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err};

    CLI::App app{"Spanning trees of unweighted networks and how well they keep distances, centrality and degrees",
                 "sptree"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("sptree ") + std::string(version()) + " (build " +
                                          std::string(build_hash()) + ")");
    std::optional<std::size_t> threads_flag;
    app.add_option("--threads", threads_flag, "worker threads (0 = all cores, 1 = bit-reproducible)");

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "write a synthetic graph as an edge list");
    std::string family_name;
    std::size_t nodes = 0;
    double kavg = 10.0;
    std::optional<std::uint64_t> seed;
    std::string out_path = "-";
    generate_cmd->add_option("--family", family_name, "er, ba or tri")->required()->check(
        CLI::IsMember({"er", "ba", "tri"}));
    generate_cmd->add_option("--nodes", nodes, "node count")->required();
    generate_cmd->add_option("--kavg", kavg, "average degree")->capture_default_str();
    generate_cmd->add_option("--seed", seed, "RNG seed");
    generate_cmd->add_option("--out", out_path, "output file or - for stdout")->capture_default_str();

    // tree
    auto* tree_cmd = app.add_subcommand("tree", "compute a spanning tree");
    std::string algo_name;
    std::string in_path = "-";
    bool lcc = false;
    tree_cmd->add_option("--algo", algo_name, "prim, kruskal, bfs or dfs")->required()->check(
        CLI::IsMember({"prim", "kruskal", "bfs", "dfs"}));
    tree_cmd->add_option("--seed", seed, "RNG seed");
    tree_cmd->add_option("--in", in_path, "edge list or - for stdin")->capture_default_str();
    tree_cmd->add_option("--out", out_path, "output file or - for stdout")->capture_default_str();
    tree_cmd->add_flag("--lcc", lcc, "reduce the input to its largest connected component");

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "distance statistics as JSON");
    bool exact = false;
    std::optional<std::size_t> sources;
    metrics_cmd->add_option("--in", in_path, "edge list or - for stdin")->capture_default_str();
    auto* exact_flag = metrics_cmd->add_flag("--exact", exact, "all-pairs BFS regardless of size");
    metrics_cmd->add_option("--sources", sources, "sample K BFS sources")->excludes(exact_flag);
    metrics_cmd->add_option("--seed", seed, "RNG seed for source sampling");
    metrics_cmd->add_flag("--lcc", lcc, "reduce the input to its largest connected component");

    // centrality
    auto* centrality_cmd = app.add_subcommand("centrality", "node centrality as CSV");
    std::string measure_name;
    centrality_cmd->add_option("--in", in_path, "edge list or - for stdin")->capture_default_str();
    centrality_cmd->add_option("--measure", measure_name, "dc, cc or bc")->required()->check(
        CLI::IsMember({"dc", "cc", "bc"}));
    centrality_cmd->add_flag("--lcc", lcc, "reduce the input to its largest connected component");

    // fitpl
    auto* fitpl_cmd = app.add_subcommand("fitpl", "fit a discrete power law to the degree sequence");
    std::string tree_algo_name;
    std::size_t bootstraps = kDefaultBootstraps;
    fitpl_cmd->add_option("--in", in_path, "edge list or - for stdin")->capture_default_str();
    fitpl_cmd->add_option("--tree-algo", tree_algo_name, "fit the degrees of this spanning tree instead")->check(
        CLI::IsMember({"prim", "kruskal", "bfs", "dfs"}));
    fitpl_cmd->add_option("--seed", seed, "RNG seed");
    fitpl_cmd->add_option("--bootstraps", bootstraps, "bootstrap replicates")->capture_default_str();
    fitpl_cmd->add_flag("--lcc", lcc, "reduce the input to its largest connected component");

    // correlate
    auto* correlate_cmd = app.add_subcommand("correlate", "Pearson r between graph and tree centrality");
    std::size_t realizations = 25;
    correlate_cmd->add_option("--in", in_path, "edge list or - for stdin")->capture_default_str();
    correlate_cmd->add_option("--algo", algo_name, "prim, kruskal, bfs or dfs")->required()->check(
        CLI::IsMember({"prim", "kruskal", "bfs", "dfs"}));
    correlate_cmd->add_option("--measure", measure_name, "dc, cc or bc")->required()->check(
        CLI::IsMember({"dc", "cc", "bc"}));
    correlate_cmd->add_option("--realizations", realizations, "trees per estimate")->capture_default_str()
        ->check(CLI::PositiveNumber);
    correlate_cmd->add_option("--seed", seed, "RNG seed");
    correlate_cmd->add_flag("--lcc", lcc, "reduce the input to its largest connected component");

    // experiment
    auto* experiment_cmd = app.add_subcommand("experiment", "run a batch experiment from a config file");
    std::string config_path;
    std::string out_dir;
    experiment_cmd->add_option("--config", config_path, "TOML config")->required();
    experiment_cmd->add_option("--out-dir", out_dir, "output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }
    ctx.threads = threads_flag.value_or(0);

    try {
        if (*generate_cmd) {
            const Family family = *parse_family(family_name);
            const std::uint64_t s = family == Family::triangular_lattice ? seed.value_or(0) : resolve_seed(ctx, seed);
            const Graph g = generate(GenSpec{family, nodes, kavg, s});
            const json header{{"family", family_name}, {"n", g.node_count()}, {"m", g.edge_count()},
                              {"k_avg", kavg},         {"seed", s}};
            emit(ctx, out_path, [&](std::ostream& os) {
                os << "# " << header.dump() << '\n';
                write_edge_list(os, g);
            });
        } else if (*tree_cmd) {
            const std::uint64_t s = resolve_seed(ctx, seed);
            const Input input = read_input(ctx, in_path, lcc);
            const SpanningTree t = spanning_tree(input.graph, *parse_tree_algorithm(algo_name), s);
            json header{{"algorithm", algo_name},
                        {"seed", s},
                        {"root", t.root ? json(*t.root) : json(nullptr)},
                        {"n", t.tree.node_count()},
                        {"m", t.tree.edge_count()}};
            emit(ctx, out_path, [&](std::ostream& os) {
                os << "# " << header.dump() << '\n';
                write_edge_list(os, t.tree);
            });
        } else if (*metrics_cmd) {
            const Input input = read_input(ctx, in_path, lcc);
            const Graph& g = input.graph;
            DistanceStats stats;
            json doc;
            const bool sampled = sources.has_value() || (!exact && g.node_count() > kExactNodeLimit);
            if (sampled) {
                const std::uint64_t s = resolve_seed(ctx, seed);
                stats = distance_stats_sampled(g, std::min(sources.value_or(kDefaultSources), g.node_count()), s,
                                               ctx.threads);
                doc = stats_json(g, stats);
                doc["seed"] = s;
                doc["d_max_is_lower_bound"] = true;
            } else {
                stats = distance_stats_exact(g, ctx.threads);
                doc = stats_json(g, stats);
            }
            out << doc.dump() << '\n';
        } else if (*centrality_cmd) {
            const Input input = read_input(ctx, in_path, lcc);
            const auto scores = centrality(input.graph, *parse_measure(measure_name), ctx.threads);
            out << "node,score\n";
            for (std::size_t v = 0; v < scores.values.size(); ++v) {
                out << input.edges.labels[v] << ',' << format_double(scores.values[v]) << '\n';
            }
        } else if (*fitpl_cmd) {
            const std::uint64_t s = resolve_seed(ctx, seed);
            const Input input = read_input(ctx, in_path, lcc);
            json doc;
            Graph subject = input.graph;
            if (!tree_algo_name.empty()) {
                subject = spanning_tree(input.graph, *parse_tree_algorithm(tree_algo_name), derive_seed(s, 0)).tree;
                doc["tree_algorithm"] = tree_algo_name;
            }
            std::vector<std::uint64_t> degrees;
            for (std::size_t d : degree_sequence(subject)) degrees.push_back(d);
            const PowerLawFit fit = fit_power_law(degrees, bootstraps, derive_seed(s, 1), ctx.threads);
            doc["gamma"] = fit.gamma;
            doc["k_min"] = fit.k_min;
            doc["ks_stat"] = fit.ks_stat;
            doc["p_value"] = fit.p_value;
            doc["p_value_stderr"] = fit.p_value_stderr;
            doc["n_tail"] = fit.n_tail;
            doc["n_samples"] = fit.n_samples;
            doc["bootstraps"] = fit.bootstraps;
            doc["threshold"] = kPlausibilityThreshold;
            doc["plausible"] = fit.plausible;
            doc["low_power"] = fit.low_power;
            doc["seed"] = s;
            out << doc.dump() << '\n';
        } else if (*correlate_cmd) {
            const std::uint64_t s = resolve_seed(ctx, seed);
            const Input input = read_input(ctx, in_path, lcc);
            const auto report = tree_centrality_correlation(input.graph, *parse_tree_algorithm(algo_name),
                                                            *parse_measure(measure_name), realizations, s,
                                                            ctx.threads, input.name);
            json per_network = json::array();
            for (const auto& [name, r] : report.per_network) per_network.push_back({{"network", name}, {"r", r}});
            const json doc{{"measure", measure_name},        {"algorithm", algo_name},
                           {"r", report.r},                  {"realizations", report.realizations},
                           {"seed", report.seed},            {"samples", report.samples},
                           {"per_network", per_network}};
            out << doc.dump() << '\n';
        } else if (*experiment_cmd) {
            ExperimentConfig cfg = load_experiment_config(config_path);
            if (threads_flag) cfg.threads = *threads_flag;
            run_experiment(cfg, out_dir);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sptree
