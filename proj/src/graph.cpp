#include "sptree/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sptree/error.hpp"

namespace sptree {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> degree(n + 1, 0);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a node outside 0.." + std::to_string(n));
        }
        if (e.u == e.v) continue;
        ++degree[e.u];
        ++degree[e.v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];

    std::vector<NodeId> raw(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        if (e.u == e.v) continue;
        raw[cursor[e.u]++] = e.v;
        raw[cursor[e.v]++] = e.u;
    }

    // sort + dedup each row, then compact
    std::size_t write = 0;
    std::vector<std::size_t> offsets(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        offsets[i] = write;
        for (auto it = first; it != last; ++it) raw[write++] = *it;
    }
    offsets[n] = write;
    raw.resize(write);
    raw.shrink_to_fit();

    g.offsets_ = std::move(offsets);
    g.targets_ = std::move(raw);
    assert(g.targets_.size() % 2 == 0);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
    if (u >= node_count() || v >= node_count()) return false;
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

double Graph::average_degree() const noexcept {
    const std::size_t n = node_count();
    return n == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(n);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

std::uint64_t Graph::fingerprint() const noexcept {
    // FNV-1a over (n, rows)
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(node_count());
    for (std::size_t o : offsets_) mix(o);
    for (NodeId t : targets_) mix(t);
    return h;
}

EdgeList EdgeList::from_ids(std::size_t n, std::vector<Edge> edges) {
    EdgeList list;
    list.edges = std::move(edges);
    list.labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        list.labels.push_back(std::to_string(i));
        list.label_map.emplace(list.labels.back(), static_cast<NodeId>(i));
    }
    return list;
}

namespace {

bool parse_unsigned(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        std::string a;
        if (!(tokens >> a)) continue;
        if (a[0] == '#' || a[0] == '%') continue;
        std::string b;
        if (!(tokens >> b)) throw ParseError(line_no, "expected two node labels, found one");
        raw.emplace_back(std::move(a), std::move(b));
    }
    if (in.bad()) throw Error("read failure while parsing edge list");
    if (raw.empty()) throw ParseError(line_no, "edge list is empty");

    std::vector<std::string> labels;
    labels.reserve(raw.size());
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    bool numeric = true;
    std::vector<std::pair<std::uint64_t, std::string>> keyed;
    keyed.reserve(labels.size());
    for (const auto& label : labels) {
        std::uint64_t value = 0;
        if (!parse_unsigned(label, value)) {
            numeric = false;
            break;
        }
        keyed.emplace_back(value, label);
    }
    if (numeric) {
        // "01" and "1" are distinct labels with the same value; order them stably
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) labels[i] = std::move(keyed[i].second);
    }
    if (labels.size() > std::numeric_limits<NodeId>::max()) throw Error("too many nodes");

    EdgeList list;
    list.labels = std::move(labels);
    list.label_map.reserve(list.labels.size());
    for (std::size_t i = 0; i < list.labels.size(); ++i) {
        list.label_map.emplace(list.labels[i], static_cast<NodeId>(i));
    }
    list.edges.reserve(raw.size());
    for (const auto& [a, b] : raw) list.edges.push_back({list.label_map.at(a), list.label_map.at(b)});
    return list;
}

EdgeList parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph simplify(const EdgeList& edges) {
    Graph g = Graph::from_edges(edges.node_count(), edges.edges);
    assert(g.edge_count() <= edges.edges.size());
    return g;
}

std::vector<std::size_t> component_labels(const Graph& g) {
    const std::size_t n = g.node_count();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::vector<NodeId> queue;
    queue.reserve(n);
    std::size_t next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId v : g.neighbors(queue[head])) {
                if (label[v] == unset) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    const auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](std::size_t c) { return c == 0; });
}

std::vector<NodeId> largest_component_nodes(const Graph& g) {
    if (g.node_count() == 0) throw InvalidArgument("largest component of an empty graph");
    const auto labels = component_labels(g);
    const std::size_t count = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::size_t> sizes(count, 0);
    for (std::size_t c : labels) ++sizes[c];
    // max_element returns the first maximum, i.e. the component with the smallest id
    const auto best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<NodeId> nodes;
    nodes.reserve(sizes[best]);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (labels[v] == best) nodes.push_back(v);
    }
    return nodes;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
    constexpr auto absent = static_cast<NodeId>(-1);
    std::vector<NodeId> relabel(g.node_count(), absent);
    for (std::size_t i = 0; i < nodes.size(); ++i) relabel[nodes[i]] = static_cast<NodeId>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (NodeId v : g.neighbors(nodes[i])) {
            const NodeId j = relabel[v];
            if (j != absent && i < j) edges.push_back({static_cast<NodeId>(i), j});
        }
    }
    return Graph::from_edges(nodes.size(), edges);
}

Graph largest_connected_component(const Graph& g) {
    const auto nodes = largest_component_nodes(g);
    if (nodes.size() == g.node_count()) return g;
    return induced_subgraph(g, nodes);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> degrees(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
    return degrees;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace sptree
