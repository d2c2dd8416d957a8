#include "ksi/graph.hpp"

#include "ksi/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace ksi {

namespace {

/// Lexicographic order by two stable counting passes (v, then u).
void sort_edges(std::vector<Edge>& edges, std::size_t n) {
    std::vector<Edge> tmp(edges.size());
    std::vector<std::size_t> start(n + 1);
    auto pass = [&](auto key, const std::vector<Edge>& from, std::vector<Edge>& to) {
        std::fill(start.begin(), start.end(), 0);
        for (const Edge& e : from) ++start[key(e) + 1];
        for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
        for (const Edge& e : from) to[start[key(e)]++] = e;
    };
    pass([](const Edge& e) { return e.v; }, edges, tmp);
    pass([](const Edge& e) { return e.u; }, tmp, edges);
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
    if (n > std::size_t{UINT32_MAX}) {
        throw ParameterError("node count " + std::to_string(n) + " exceeds 32-bit id space");
    }
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    std::size_t loops = 0;
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw ParameterError("endpoint out of range in edge (" + std::to_string(e.u) + ", " +
                                 std::to_string(e.v) + ") for n=" + std::to_string(n));
        }
        if (e.u == e.v) {
            ++loops;
            continue;
        }
        canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    sort_edges(canon, n);
    const auto last = std::unique(canon.begin(), canon.end());
    const std::size_t dups = static_cast<std::size_t>(canon.end() - last);
    canon.erase(last, canon.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : canon) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(2 * canon.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Canonical order fills each list sorted: lower neighbors first, ascending
    // by u, then higher neighbors ascending by v.
    for (const Edge& e : canon) g.targets_[fill[e.v]++] = e.u;
    for (const Edge& e : canon) g.targets_[fill[e.u]++] = e.v;
    if (stats != nullptr) {
        stats->self_loops_dropped = loops;
        stats->duplicates_dropped = dups;
    }
    return g;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(node_count());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = offsets_[i + 1] - offsets_[i];
    return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
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

void Graph::check_node(NodeId i) const {
    if (i >= node_count()) {
        throw NodeIndexError("node " + std::to_string(i) + " out of range for n=" +
                             std::to_string(node_count()));
    }
}

namespace {

bool parse_label(std::string_view tok, std::uint64_t& out) {
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_nodes_header(std::string_view line, std::uint64_t& n) {
    // "# nodes=<n> ..." as written by write_edge_list
    line.remove_prefix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    constexpr std::string_view key = "nodes=";
    if (!line.starts_with(key)) return false;
    line.remove_prefix(key.size());
    const auto end = line.find_first_of(" \t\r");
    return parse_label(line.substr(0, end), n);
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
    ParsedGraph out;
    std::unordered_map<std::uint64_t, NodeId> ids;
    auto intern = [&](std::uint64_t label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(out.labels.size()));
        if (inserted) out.labels.push_back(label);
        return it->second;
    };

    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    bool seen_edge = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty()) continue;
        if (view.front() == '#') {
            std::uint64_t n = 0;
            if (!seen_edge && out.labels.empty() && parse_nodes_header(view, n)) {
                for (std::uint64_t l = 0; l < n; ++l) intern(l);
            }
            continue;
        }
        std::string_view toks[2];
        std::size_t count = 0;
        while (count < 2) {
            while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
            if (view.empty()) break;
            const auto end = view.find_first_of(" \t");
            toks[count++] = view.substr(0, end);
            view.remove_prefix(end == std::string_view::npos ? view.size() : end);
        }
        if (count < 2) throw ParseError(lineno, "expected two node labels");
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        if (!parse_label(toks[0], a)) throw ParseError(lineno, "invalid node label '" + std::string(toks[0]) + "'");
        if (!parse_label(toks[1], b)) throw ParseError(lineno, "invalid node label '" + std::string(toks[1]) + "'");
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        edges.push_back({u, v});
        seen_edge = true;
    }
    out.graph = Graph::from_edges(out.labels.size(), edges, &out.stats);
    return out;
}

ParsedGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open edge list '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> header_lines) {
    for (const auto& h : header_lines) out << "# " << h << '\n';
    out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string serialize_edge_list(const Graph& g, std::span<const std::string> header_lines) {
    std::ostringstream out;
    write_edge_list(out, g, header_lines);
    return out.str();
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<NodeId>> comps;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto& comp = comps.emplace_back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

}  // namespace ksi
