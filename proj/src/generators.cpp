#include "ksi/generators.hpp"

#include "ksi/error.hpp"
#include "ksi/format.hpp"
#include "ksi/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace ksi {

namespace {

void check_probability(double p, std::string_view what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError(std::string(what) + " must lie in [0, 1], got " + format_float_exact(p));
    }
}

void check_lattice(std::size_t n, std::size_t k) {
    if (2 * k >= n) {
        throw ParameterError("ring lattice requires 2k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

std::uint64_t edge_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
}

/// Growing simple graph with an endpoint multiset for degree-proportional draws.
class GrowingGraph {
public:
    explicit GrowingGraph(std::size_t n) : adj_(n) {}

    void add_edge(NodeId a, NodeId b) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        endpoints_.push_back(a);
        endpoints_.push_back(b);
        edges_.push_back({a, b});
    }

    /// Degree-proportional draw over nodes [0, existing); uniform while no
    /// edge exists yet.
    NodeId preferential(Rng& rng, std::size_t existing) const {
        if (endpoints_.empty()) return static_cast<NodeId>(rng.below(existing));
        return endpoints_[rng.below(endpoints_.size())];
    }

    [[nodiscard]] const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

private:
    std::vector<std::vector<NodeId>> adj_;
    std::vector<NodeId> endpoints_;
    std::vector<Edge> edges_;
};

}  // namespace

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p, "edge probability p");
    Rng rng(seed);
    std::vector<Edge> edges;
    if (p > 0.0) {
        const double expected = p * static_cast<double>(n) * static_cast<double>(n > 0 ? n - 1 : 0) / 2.0;
        edges.reserve(static_cast<std::size_t>(expected * 1.05) + 16);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_ring_lattice(std::size_t n, std::size_t k) {
    check_lattice(n, k);
    std::vector<Edge> edges;
    edges.reserve(n * k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 1; t <= k; ++t) {
            edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + t) % n)});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t seed) {
    check_lattice(n, k);
    check_probability(p_rewire, "rewiring probability");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> present;
    present.reserve(2 * n * k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 1; t <= k; ++t) {
            present.insert(edge_key(static_cast<NodeId>(i), static_cast<NodeId>((i + t) % n)));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto u = static_cast<NodeId>(i);
        for (std::size_t t = 1; t <= k; ++t) {
            if (!rng.bernoulli(p_rewire)) continue;
            const auto old = static_cast<NodeId>((i + t) % n);
            for (std::size_t attempt = 0; attempt < n; ++attempt) {
                const auto w = static_cast<NodeId>(rng.below(n));
                if (w == u || present.contains(edge_key(u, w))) continue;
                present.erase(edge_key(u, old));
                present.insert(edge_key(u, w));
                break;
            }
        }
    }
    std::vector<Edge> edges;
    edges.reserve(present.size());
    for (std::uint64_t key : present) {
        edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffU)});
    }
    return Graph::from_edges(n, edges);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
    if (m_attach < 1 || m_attach >= n) {
        throw ParameterError("Barabasi-Albert requires 1 <= m_attach < n, got n=" + std::to_string(n) +
                             " m_attach=" + std::to_string(m_attach));
    }
    Rng rng(seed);
    GrowingGraph grow(n);
    for (std::size_t a = 0; a < m_attach; ++a) {
        for (std::size_t b = a + 1; b < m_attach; ++b) grow.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
    std::vector<NodeId> targets;
    for (std::size_t v = m_attach; v < n; ++v) {
        targets.clear();
        while (targets.size() < m_attach) {
            const NodeId t = grow.preferential(rng, v);
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeId t : targets) grow.add_edge(static_cast<NodeId>(v), t);
    }
    return Graph::from_edges(n, grow.edges());
}

bool is_graphical(std::span<const std::size_t> degrees) {
    std::vector<std::size_t> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    const std::size_t n = d.size();
    std::uint64_t total = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
    if (total % 2 != 0) return false;
    std::uint64_t lhs = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        lhs += d[r - 1];
        std::uint64_t rhs = static_cast<std::uint64_t>(r) * (r - 1);
        for (std::size_t i = r; i < n; ++i) rhs += std::min<std::uint64_t>(d[i], r);
        if (lhs > rhs) return false;
    }
    return true;
}

Graph gen_havel_hakimi(std::span<const std::size_t> degrees) {
    const std::size_t n = degrees.size();
    std::vector<std::size_t> residual(degrees.begin(), degrees.end());
    const std::uint64_t total = std::accumulate(residual.begin(), residual.end(), std::uint64_t{0});
    if (total % 2 != 0) {
        throw ParameterError("degree sequence is not graphical: degree sum " + std::to_string(total) + " is odd");
    }
    std::vector<NodeId> order(n);
    std::vector<Edge> edges;
    edges.reserve(total / 2);
    auto by_residual = [&](NodeId a, NodeId b) {
        return residual[a] != residual[b] ? residual[a] > residual[b] : a < b;
    };
    for (std::size_t step = 1;; ++step) {
        std::iota(order.begin(), order.end(), NodeId{0});
        std::sort(order.begin(), order.end(), by_residual);
        if (n == 0 || residual[order[0]] == 0) break;
        const NodeId v = order[0];
        const std::size_t need = residual[v];
        if (need > n - 1 || residual[order[need]] == 0) {
            std::size_t available = 0;
            for (std::size_t i = 1; i < n && residual[order[i]] > 0; ++i) ++available;
            throw ParameterError("degree sequence is not graphical: at step " + std::to_string(step) + " node " +
                                 std::to_string(v) + " needs " + std::to_string(need) + " neighbors but only " +
                                 std::to_string(available) + " nodes have residual degree");
        }
        residual[v] = 0;
        for (std::size_t i = 1; i <= need; ++i) {
            const NodeId u = order[i];
            --residual[u];
            edges.push_back({v, u});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_bhl(std::size_t n, std::size_t n0, std::size_t m, std::uint64_t seed, const BhlOptions& options) {
    if (m < 1 || 2 * m > n0 || n0 > n) {
        throw ParameterError("BHL requires 1 <= m, 2m <= n0 <= n, got n=" + std::to_string(n) +
                             " n0=" + std::to_string(n0) + " m=" + std::to_string(m));
    }
    check_probability(options.triad_probability, "triad probability");
    Rng rng(seed);

    Graph initial;
    bool realized = false;
    std::vector<std::size_t> degrees(n0);
    for (std::size_t attempt = 0; attempt <= options.max_sequence_retries && !realized; ++attempt) {
        for (auto& d : degrees) d = m + rng.below(n0 - 2 * m + 1);
        const auto sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
        if (sum % 2 != 0) ++degrees[rng.below(n0)];
        if (!is_graphical(degrees)) continue;
        initial = gen_havel_hakimi(degrees);
        realized = true;
    }
    if (!realized) {
        throw ParameterError("BHL: no graphical initial degree sequence after " +
                             std::to_string(options.max_sequence_retries) + " retries");
    }

    GrowingGraph grow(n);
    for (const Edge& e : initial.edges()) grow.add_edge(e.u, e.v);
    std::vector<NodeId> targets;
    std::vector<NodeId> candidates;
    for (std::size_t v = n0; v < n; ++v) {
        targets.clear();
        auto chosen = [&](NodeId t) { return std::find(targets.begin(), targets.end(), t) != targets.end(); };
        targets.push_back(grow.preferential(rng, v));
        while (targets.size() < m) {
            NodeId next = 0;
            bool picked = false;
            if (rng.bernoulli(options.triad_probability)) {
                candidates.clear();
                for (NodeId u : grow.neighbors(targets.back())) {
                    if (!chosen(u)) candidates.push_back(u);
                }
                if (!candidates.empty()) {
                    next = candidates[rng.below(candidates.size())];
                    picked = true;
                }
            }
            while (!picked) {
                next = grow.preferential(rng, v);
                picked = !chosen(next);
            }
            targets.push_back(next);
        }
        for (NodeId t : targets) grow.add_edge(static_cast<NodeId>(v), t);
    }
    return Graph::from_edges(n, grow.edges());
}

std::string_view to_string(GenFamily f) noexcept {
    switch (f) {
        case GenFamily::erdos_renyi: return "erdos_renyi";
        case GenFamily::ring_lattice: return "ring_lattice";
        case GenFamily::watts_strogatz: return "watts_strogatz";
        case GenFamily::barabasi_albert: return "barabasi_albert";
        case GenFamily::havel_hakimi: return "havel_hakimi";
        case GenFamily::bhl: return "bhl";
    }
    return "unknown";
}

GenFamily gen_family_from_string(std::string_view name) {
    for (auto f : {GenFamily::erdos_renyi, GenFamily::ring_lattice, GenFamily::watts_strogatz,
                   GenFamily::barabasi_albert, GenFamily::havel_hakimi, GenFamily::bhl}) {
        if (to_string(f) == name) return f;
    }
    if (name == "er") return GenFamily::erdos_renyi;
    if (name == "ws") return GenFamily::watts_strogatz;
    if (name == "ba") return GenFamily::barabasi_albert;
    if (name == "hh") return GenFamily::havel_hakimi;
    throw ParameterError("unknown generator family '" + std::string(name) + "'");
}

Graph generate(const GenSpec& s) {
    switch (s.family) {
        case GenFamily::erdos_renyi: return gen_erdos_renyi(s.n, s.p, s.seed);
        case GenFamily::ring_lattice: return gen_ring_lattice(s.n, s.k);
        case GenFamily::watts_strogatz: return gen_watts_strogatz(s.n, s.k, s.p, s.seed);
        case GenFamily::barabasi_albert: return gen_barabasi_albert(s.n, s.m, s.seed);
        case GenFamily::havel_hakimi: return gen_havel_hakimi(s.degrees);
        case GenFamily::bhl: return gen_bhl(s.n, s.n0, s.m, s.seed);
    }
    throw ParameterError("unknown generator family");
}

namespace {

nlohmann::json params_json(const GenSpec& s) {
    nlohmann::json p = nlohmann::json::object();
    switch (s.family) {
        case GenFamily::erdos_renyi: p = {{"n", s.n}, {"p", s.p}}; break;
        case GenFamily::ring_lattice: p = {{"n", s.n}, {"k", s.k}}; break;
        case GenFamily::watts_strogatz: p = {{"n", s.n}, {"k", s.k}, {"p", s.p}}; break;
        case GenFamily::barabasi_albert: p = {{"n", s.n}, {"m", s.m}}; break;
        case GenFamily::havel_hakimi: p = {{"degrees", s.degrees}}; break;
        case GenFamily::bhl: p = {{"n", s.n}, {"n0", s.n0}, {"m", s.m}}; break;
    }
    return p;
}

}  // namespace

std::string genspec_to_json(const GenSpec& s) {
    const nlohmann::json j = {{"family", std::string(to_string(s.family))}, {"params", params_json(s)}, {"seed", s.seed}};
    return j.dump();
}

GenSpec genspec_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError(std::string("invalid GenSpec JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("family")) throw ParameterError("GenSpec JSON needs a \"family\" field");
    GenSpec s;
    try {
        s.family = gen_family_from_string(j.at("family").get<std::string>());
        s.seed = j.value("seed", std::uint64_t{0});
        const nlohmann::json params = j.value("params", nlohmann::json::object());
        s.n = params.value("n", std::size_t{0});
        s.p = params.value("p", 0.0);
        s.k = params.value("k", std::size_t{0});
        s.m = params.value("m", std::size_t{0});
        s.n0 = params.value("n0", std::size_t{0});
        s.degrees = params.value("degrees", std::vector<std::size_t>{});
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("invalid GenSpec JSON: ") + e.what());
    }
    return s;
}

std::vector<std::string> genspec_header(const GenSpec& s) {
    std::vector<std::string> lines;
    lines.push_back("family=" + std::string(to_string(s.family)));
    const auto params = params_json(s);
    for (const auto& [key, value] : params.items()) {
        if (value.is_number_float()) {
            lines.push_back(key + "=" + format_float_exact(value.get<double>()));
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& d : value) joined += (joined.empty() ? "" : ",") + d.dump();
            lines.push_back(key + "=" + joined);
        } else {
            lines.push_back(key + "=" + value.dump());
        }
    }
    lines.push_back("seed=" + std::to_string(s.seed));
    return lines;
}

}  // namespace ksi
