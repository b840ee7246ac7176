#include "sptree/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <variant>

#include "sptree/error.hpp"

namespace sptree {

std::string_view to_string(ExperimentKind kind) noexcept {
    switch (kind) {
        case ExperimentKind::scaling_synthetic: return "scaling_synthetic";
        case ExperimentKind::collection_real: return "collection_real";
        case ExperimentKind::correlation: return "correlation";
    }
    return "?";
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::graph: return "graph";
        case Method::prim: return "prim";
        case Method::kruskal: return "kruskal";
        case Method::bfs: return "bfs";
        case Method::dfs: return "dfs";
    }
    return "?";
}

std::string_view to_string(MetricMode mode) noexcept {
    switch (mode) {
        case MetricMode::automatic: return "auto";
        case MetricMode::exact: return "exact";
        case MetricMode::sampled: return "sampled";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "graph") return Method::graph;
    if (auto algo = parse_tree_algorithm(name)) {
        switch (*algo) {
            case TreeAlgorithm::prim: return Method::prim;
            case TreeAlgorithm::kruskal: return Method::kruskal;
            case TreeAlgorithm::bfs: return Method::bfs;
            case TreeAlgorithm::dfs: return Method::dfs;
        }
    }
    return std::nullopt;
}

std::optional<TreeAlgorithm> tree_algorithm(Method method) noexcept {
    switch (method) {
        case Method::graph: return std::nullopt;
        case Method::prim: return TreeAlgorithm::prim;
        case Method::kruskal: return TreeAlgorithm::kruskal;
        case Method::bfs: return TreeAlgorithm::bfs;
        case Method::dfs: return TreeAlgorithm::dfs;
    }
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (realizations == 0) throw InvalidArgument("config: realizations must be >= 1");
    if (!std::is_sorted(ladder.begin(), ladder.end()) ||
        std::adjacent_find(ladder.begin(), ladder.end()) != ladder.end()) {
        throw InvalidArgument("config: ladder must be strictly increasing");
    }
    if (methods.empty()) throw InvalidArgument("config: algorithms must not be empty");
    if (metric_mode == MetricMode::sampled && sources == 0) throw InvalidArgument("config: sources must be >= 1");
    switch (kind) {
        case ExperimentKind::scaling_synthetic:
            if (!family) throw InvalidArgument("config: scaling_synthetic needs a family");
            if (ladder.empty()) throw InvalidArgument("config: scaling_synthetic needs a ladder");
            break;
        case ExperimentKind::collection_real:
            if (input_dir.empty()) throw InvalidArgument("config: collection_real needs input_dir");
            break;
        case ExperimentKind::correlation:
            if (input_dir.empty() && (!family || ladder.empty())) {
                throw InvalidArgument("config: correlation needs input_dir or family + ladder");
            }
            if (measures.empty()) throw InvalidArgument("config: measures must not be empty");
            if (std::none_of(methods.begin(), methods.end(), [](Method m) { return m != Method::graph; })) {
                throw InvalidArgument("config: correlation needs at least one tree algorithm");
            }
            break;
    }
}

namespace {

using Scalar = std::variant<std::string, std::int64_t, double, bool>;
struct Value {
    std::vector<Scalar> items;
    bool is_array = false;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Drops a trailing comment, respecting double-quoted strings.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

Scalar parse_scalar(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.empty()) throw ParseError(line, "missing value");
    if (text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') throw ParseError(line, "unterminated string");
        return std::string(text.substr(1, text.size() - 2));
    }
    if (text == "true") return true;
    if (text == "false") return false;
    std::string cleaned;
    for (char c : text) {
        if (c != '_') cleaned.push_back(c);
    }
    std::int64_t integer = 0;
    auto [ip, iec] = std::from_chars(cleaned.data(), cleaned.data() + cleaned.size(), integer);
    if (iec == std::errc() && ip == cleaned.data() + cleaned.size()) return integer;
    double real = 0.0;
    auto [rp, rec] = std::from_chars(cleaned.data(), cleaned.data() + cleaned.size(), real);
    if (rec == std::errc() && rp == cleaned.data() + cleaned.size()) return real;
    throw ParseError(line, "cannot parse value '" + std::string(text) + "'");
}

Value parse_value(std::string_view text, std::size_t line) {
    text = trim(text);
    Value value;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw ParseError(line, "arrays must close on the same line");
        value.is_array = true;
        std::string_view body = trim(text.substr(1, text.size() - 2));
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto item = trim(body.substr(0, comma));
            if (!item.empty()) value.items.push_back(parse_scalar(item, line));
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
        }
        return value;
    }
    value.items.push_back(parse_scalar(text, line));
    return value;
}

struct Reader {
    std::string key;
    std::size_t line;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, key + ": " + what); }

    const Scalar& single(const Value& v) const {
        if (v.is_array || v.items.size() != 1) fail("expected a single value");
        return v.items.front();
    }

    std::string text(const Scalar& s) const {
        if (const auto* p = std::get_if<std::string>(&s)) return *p;
        fail("expected a string");
    }
    std::int64_t integer(const Scalar& s) const {
        if (const auto* p = std::get_if<std::int64_t>(&s)) return *p;
        fail("expected an integer");
    }
    std::size_t count(const Scalar& s) const {
        const auto v = integer(s);
        if (v < 0) fail("expected a non-negative integer");
        return static_cast<std::size_t>(v);
    }
    double real(const Scalar& s) const {
        if (const auto* p = std::get_if<double>(&s)) return *p;
        return static_cast<double>(integer(s));
    }
    bool boolean(const Scalar& s) const {
        if (const auto* p = std::get_if<bool>(&s)) return *p;
        fail("expected true or false");
    }
};

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
    ExperimentConfig cfg;
    bool realizations_set = false;
    std::vector<std::string> seen;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') throw ParseError(line_no, "tables are not supported");
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) throw ParseError(line_no, "duplicate key " + key);
        seen.push_back(key);
        const Value value = parse_value(line.substr(eq + 1), line_no);
        const Reader r{key, line_no};

        if (key == "kind") {
            const auto s = r.text(r.single(value));
            if (s == "scaling_synthetic") cfg.kind = ExperimentKind::scaling_synthetic;
            else if (s == "collection_real") cfg.kind = ExperimentKind::collection_real;
            else if (s == "correlation") cfg.kind = ExperimentKind::correlation;
            else r.fail("unknown kind '" + s + "'");
        } else if (key == "family") {
            const auto s = r.text(r.single(value));
            cfg.family = parse_family(s);
            if (!cfg.family) r.fail("unknown family '" + s + "'");
        } else if (key == "input_dir") {
            cfg.input_dir = r.text(r.single(value));
        } else if (key == "ladder") {
            cfg.ladder.clear();
            for (const auto& item : value.items) cfg.ladder.push_back(r.count(item));
        } else if (key == "k_avg") {
            cfg.k_avg = r.real(r.single(value));
        } else if (key == "algorithms") {
            cfg.methods.clear();
            for (const auto& item : value.items) {
                const auto s = r.text(item);
                const auto m = parse_method(s);
                if (!m) r.fail("unknown algorithm '" + s + "'");
                cfg.methods.push_back(*m);
            }
        } else if (key == "realizations") {
            cfg.realizations = r.count(r.single(value));
            realizations_set = true;
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(r.integer(r.single(value)));
        } else if (key == "metric_mode") {
            const auto s = r.text(r.single(value));
            if (s == "auto") cfg.metric_mode = MetricMode::automatic;
            else if (s == "exact") cfg.metric_mode = MetricMode::exact;
            else if (s == "sampled") cfg.metric_mode = MetricMode::sampled;
            else r.fail("unknown metric mode '" + s + "'");
        } else if (key == "sources") {
            cfg.sources = r.count(r.single(value));
        } else if (key == "measures") {
            cfg.measures.clear();
            for (const auto& item : value.items) {
                const auto s = r.text(item);
                const auto m = parse_measure(s);
                if (!m) r.fail("unknown measure '" + s + "'");
                cfg.measures.push_back(*m);
            }
        } else if (key == "fit_degrees") {
            cfg.fit_degrees = r.boolean(r.single(value));
        } else if (key == "bootstraps") {
            cfg.bootstraps = r.count(r.single(value));
        } else if (key == "threads") {
            cfg.threads = r.count(r.single(value));
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }
    if (!realizations_set && cfg.kind == ExperimentKind::correlation) cfg.realizations = 25;
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    ExperimentConfig cfg = parse_experiment_config(text.str());
    if (!cfg.input_dir.empty() && cfg.input_dir.is_relative()) {
        cfg.input_dir = path.parent_path() / cfg.input_dir;
    }
    return cfg;
}

}  // namespace sptree
