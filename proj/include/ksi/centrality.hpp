#pragma once

#include "ksi/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace ksi {

enum class Measure { ksi, ksi_normalized, clustering };

std::string_view to_string(Measure m) noexcept;

/// Arithmetic mean computed as x0 + sum(x_i - x0) / n, summed in index order;
/// exact for constant input. Throws UndefinedInputError on empty input.
double mean_of(std::span<const double> values);

/// Per-node values of one measure, indexed by node id.
struct CentralityVector {
    Measure measure = Measure::ksi;
    std::vector<double> values;
    std::size_t graph_n = 0;

    [[nodiscard]] double mean() const;
};

/// Integer per-node quantities every measure is derived from.
///   boundary[i]    = |E(N(i), V \ N(i))|, edges leaving the open neighborhood
///                    (edges back to i itself included)
///   inner_edges[i] = |E(N(i))|, edges with both endpoints in N(i)
struct NeighborhoodCounts {
    std::vector<std::int64_t> boundary;
    std::vector<std::int64_t> inner_edges;
};

/// Neighborhood scan over every node. Cost is O(sum_i sum_{j~i} min-intersection)
/// with sorted-list intersections; results do not depend on `threads`.
NeighborhoodCounts neighborhood_counts(const Graph& g, unsigned threads = 1);

std::int64_t boundary_edge_count(const Graph& g, NodeId i);
std::int64_t inner_edge_count(const Graph& g, NodeId i);

/// Ksi-centrality: boundary / d_i, and 1 for isolated nodes.
double ksi(const Graph& g, NodeId i);
/// Normalized ksi-centrality: boundary / (d_i (n - d_i)), and 1/n for isolated nodes.
double ksi_normalized(const Graph& g, NodeId i);
/// Local clustering coefficient; 0 when d_i <= 1.
double local_clustering(const Graph& g, NodeId i);

// Value conventions shared by every computation path.
double ksi_from_counts(std::int64_t boundary, std::size_t degree);
double ksi_normalized_from_counts(std::int64_t boundary, std::size_t degree, std::size_t n);
double clustering_from_counts(std::int64_t inner_edges, std::size_t degree);

CentralityVector ksi_vector(const Graph& g, unsigned threads = 1);
CentralityVector ksi_normalized_vector(const Graph& g, unsigned threads = 1);
CentralityVector clustering_vector(const Graph& g, unsigned threads = 1);

/// All three measures from a single scan.
struct CentralityTable {
    NeighborhoodCounts counts;
    CentralityVector ksi;
    CentralityVector ksi_normalized;
    CentralityVector clustering;
};
CentralityTable centrality_table(const Graph& g, unsigned threads = 1);

/// Graph averages Xi(G), Xi_hat(G) and the average clustering coefficient.
/// Throw UndefinedInputError on the empty graph.
double average_ksi(const Graph& g, unsigned threads = 1);
double average_ksi_normalized(const Graph& g, unsigned threads = 1);
double average_clustering(const Graph& g, unsigned threads = 1);

// Dense verification paths. Both throw CapacityError above `node_cap` nodes.

inline constexpr std::size_t kDefaultMatrixNodeCap = 5000;

/// xi_i = (A^2 * Abar)_ii / (A^2)_ii with Abar = J - A, J the all-ones matrix.
CentralityVector ksi_via_adjacency_matrix(const Graph& g, std::size_t node_cap = kDefaultMatrixNodeCap);

/// Diagonal of L^3, i.e. sum_{j,k} l_ij l_jk l_ki, as exact integers.
/// Equals d_i^3 + 2 d_i^2 + boundary_i.
std::vector<std::int64_t> laplacian_triple_sums(const Graph& g, std::size_t node_cap = kDefaultMatrixNodeCap);

/// xi_hat_i = ((L^3)_ii - 2 d_i^2) / (d_i (n - d_i)) - d_i^2 / (n - d_i).
CentralityVector ksi_normalized_via_laplacian(const Graph& g, std::size_t node_cap = kDefaultMatrixNodeCap);

}  // namespace ksi
