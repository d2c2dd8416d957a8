#include "ksi/centrality.hpp"

#include "ksi/error.hpp"
#include "ksi/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <string>

namespace ksi {

std::string_view to_string(Measure m) noexcept {
    switch (m) {
        case Measure::ksi: return "ksi";
        case Measure::ksi_normalized: return "ksi_normalized";
        case Measure::clustering: return "clustering";
    }
    return "unknown";
}

double mean_of(std::span<const double> values) {
    if (values.empty()) throw UndefinedInputError("mean of an empty vector");
    const double ref = values.front();
    double shift = 0.0;
    for (double v : values) shift += v - ref;
    return ref + shift / static_cast<double>(values.size());
}

double CentralityVector::mean() const { return mean_of(values); }

namespace {

/// |a ∩ b| for sorted, duplicate-free spans.
std::int64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.empty()) return 0;
    std::int64_t count = 0;
    // Binary search the short list into the long one when that is cheaper
    // than a linear merge.
    if (a.size() * 16 < b.size()) {
        auto lo = b.begin();
        for (NodeId x : a) {
            lo = std::lower_bound(lo, b.end(), x);
            if (lo == b.end()) break;
            if (*lo == x) ++count;
        }
        return count;
    }
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

constexpr std::size_t kBitsetNodeCap = 8192;

struct NodeCounts {
    std::int64_t boundary = 0;
    std::int64_t inner = 0;
};

NodeCounts scan_node(const Graph& g, NodeId i) {
    const auto ni = g.neighbors(i);
    std::int64_t degree_sum = 0;
    std::int64_t twice_inner = 0;
    for (NodeId j : ni) {
        const auto nj = g.neighbors(j);
        degree_sum += static_cast<std::int64_t>(nj.size());
        twice_inner += intersection_size(ni, nj);
    }
    // Each edge inside N(i) is seen from both endpoints; every other edge at a
    // neighbor leaves N(i).
    return {degree_sum - twice_inner, twice_inner / 2};
}

CentralityVector make_vector(Measure m, std::size_t n) {
    CentralityVector v;
    v.measure = m;
    v.values.resize(n);
    v.graph_n = n;
    return v;
}

void check_capacity(const Graph& g, std::size_t cap) {
    if (g.node_count() > cap) {
        throw CapacityError("dense matrix path limited to " + std::to_string(cap) + " nodes (graph has " +
                            std::to_string(g.node_count()) + "); use the neighborhood scan instead");
    }
    if (g.node_count() == 0) throw UndefinedInputError("matrix path requires n >= 1");
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j : g.neighbors(i)) a(i, j) = 1.0;
    }
    return a;
}

}  // namespace

NeighborhoodCounts neighborhood_counts(const Graph& g, unsigned threads) {
    const std::size_t n = g.node_count();
    NeighborhoodCounts out;
    out.boundary.resize(n);
    out.inner_edges.resize(n);
    const std::size_t words = (n + 63) / 64;
    if (n > 0 && n <= kBitsetNodeCap && 4 * words * n <= 2 * g.edge_count()) {
        // Dense graphs: adjacency rows as bitsets, intersections by popcount.
        std::vector<std::uint64_t> rows(n * words, 0);
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j : g.neighbors(i)) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
        parallel_for(n, threads, [&](std::size_t i) {
            const std::uint64_t* ri = rows.data() + i * words;
            std::int64_t degree_sum = 0;
            std::int64_t twice_inner = 0;
            for (NodeId j : g.neighbors(static_cast<NodeId>(i))) {
                const std::uint64_t* rj = rows.data() + static_cast<std::size_t>(j) * words;
                degree_sum += static_cast<std::int64_t>(g.degree(j));
                for (std::size_t w = 0; w < words; ++w) twice_inner += std::popcount(ri[w] & rj[w]);
            }
            out.boundary[i] = degree_sum - twice_inner;
            out.inner_edges[i] = twice_inner / 2;
        });
        return out;
    }
    parallel_for(n, threads, [&](std::size_t i) {
        const auto c = scan_node(g, static_cast<NodeId>(i));
        out.boundary[i] = c.boundary;
        out.inner_edges[i] = c.inner;
    });
    return out;
}

std::int64_t boundary_edge_count(const Graph& g, NodeId i) {
    g.check_node(i);
    return scan_node(g, i).boundary;
}

std::int64_t inner_edge_count(const Graph& g, NodeId i) {
    g.check_node(i);
    return scan_node(g, i).inner;
}

double ksi_from_counts(std::int64_t boundary, std::size_t degree) {
    if (degree == 0) return 1.0;
    return static_cast<double>(boundary) / static_cast<double>(degree);
}

double ksi_normalized_from_counts(std::int64_t boundary, std::size_t degree, std::size_t n) {
    if (degree == 0) return 1.0 / static_cast<double>(n);
    assert(degree < n);
    const auto denom = static_cast<std::int64_t>(degree) * static_cast<std::int64_t>(n - degree);
    return static_cast<double>(boundary) / static_cast<double>(denom);
}

double clustering_from_counts(std::int64_t inner_edges, std::size_t degree) {
    if (degree <= 1) return 0.0;
    const auto pairs = static_cast<std::int64_t>(degree) * static_cast<std::int64_t>(degree - 1);
    return static_cast<double>(2 * inner_edges) / static_cast<double>(pairs);
}

double ksi(const Graph& g, NodeId i) {
    g.check_node(i);
    return ksi_from_counts(scan_node(g, i).boundary, g.degree(i));
}

double ksi_normalized(const Graph& g, NodeId i) {
    g.check_node(i);
    return ksi_normalized_from_counts(scan_node(g, i).boundary, g.degree(i), g.node_count());
}

double local_clustering(const Graph& g, NodeId i) {
    g.check_node(i);
    return clustering_from_counts(scan_node(g, i).inner, g.degree(i));
}

CentralityTable centrality_table(const Graph& g, unsigned threads) {
    const std::size_t n = g.node_count();
    CentralityTable t;
    t.counts = neighborhood_counts(g, threads);
    t.ksi = make_vector(Measure::ksi, n);
    t.ksi_normalized = make_vector(Measure::ksi_normalized, n);
    t.clustering = make_vector(Measure::clustering, n);
    for (NodeId i = 0; i < n; ++i) {
        const std::size_t d = g.degree(i);
        t.ksi.values[i] = ksi_from_counts(t.counts.boundary[i], d);
        t.ksi_normalized.values[i] = ksi_normalized_from_counts(t.counts.boundary[i], d, n);
        t.clustering.values[i] = clustering_from_counts(t.counts.inner_edges[i], d);
    }
    return t;
}

CentralityVector ksi_vector(const Graph& g, unsigned threads) { return centrality_table(g, threads).ksi; }

CentralityVector ksi_normalized_vector(const Graph& g, unsigned threads) {
    return centrality_table(g, threads).ksi_normalized;
}

CentralityVector clustering_vector(const Graph& g, unsigned threads) {
    return centrality_table(g, threads).clustering;
}

double average_ksi(const Graph& g, unsigned threads) {
    if (g.node_count() == 0) throw UndefinedInputError("Xi(G) is undefined for the empty graph");
    return ksi_vector(g, threads).mean();
}

double average_ksi_normalized(const Graph& g, unsigned threads) {
    if (g.node_count() == 0) throw UndefinedInputError("Xi_hat(G) is undefined for the empty graph");
    return ksi_normalized_vector(g, threads).mean();
}

double average_clustering(const Graph& g, unsigned threads) {
    if (g.node_count() == 0) throw UndefinedInputError("average clustering is undefined for the empty graph");
    return clustering_vector(g, threads).mean();
}

CentralityVector ksi_via_adjacency_matrix(const Graph& g, std::size_t node_cap) {
    check_capacity(g, node_cap);
    const std::size_t n = g.node_count();
    const Eigen::MatrixXd a = adjacency_matrix(g);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd abar = Eigen::MatrixXd::Ones(a.rows(), a.cols()) - a;
    // (A^2 Abar)_ii without forming the full product.
    const Eigen::VectorXd num = a2.cwiseProduct(abar.transpose()).rowwise().sum();
    auto out = make_vector(Measure::ksi, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double di = a2(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        out.values[i] = di == 0.0 ? 1.0 : num(static_cast<Eigen::Index>(i)) / di;
    }
    return out;
}

std::vector<std::int64_t> laplacian_triple_sums(const Graph& g, std::size_t node_cap) {
    check_capacity(g, node_cap);
    const std::size_t n = g.node_count();
    Eigen::MatrixXd l = -adjacency_matrix(g);
    for (std::size_t i = 0; i < n; ++i) {
        l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = static_cast<double>(g.degree(static_cast<NodeId>(i)));
    }
    const Eigen::MatrixXd l2 = l * l;
    // Entries stay far below 2^53 under the node cap, so the sums are exact.
    const Eigen::VectorXd diag = l2.cwiseProduct(l).rowwise().sum();
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::llround(diag(static_cast<Eigen::Index>(i)));
    return out;
}

CentralityVector ksi_normalized_via_laplacian(const Graph& g, std::size_t node_cap) {
    const auto triple = laplacian_triple_sums(g, node_cap);
    const std::size_t n = g.node_count();
    auto out = make_vector(Measure::ksi_normalized, n);
    const double nn = static_cast<double>(n);
    for (NodeId i = 0; i < n; ++i) {
        const double d = static_cast<double>(g.degree(i));
        if (d == 0.0) {
            out.values[i] = 1.0 / nn;
            continue;
        }
        out.values[i] = (static_cast<double>(triple[i]) - 2.0 * d * d) / (d * (nn - d)) - d * d / (nn - d);
    }
    return out;
}

}  // namespace ksi
