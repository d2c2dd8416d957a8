#pragma once

#include "ksi/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ksi {

// Every randomized generator draws from ksi::Rng(seed), i.e. stream 0 of the
// seed (see rng.hpp); the draw order is part of each function's contract so
// ports can reproduce graphs bit for bit.

/// G(n, p): pairs (i, j), i < j, visited in lexicographic order, one
/// uniform() < p draw each. Throws ParameterError unless 0 <= p <= 1.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Circulant graph: i ~ i±1, ..., i±k (mod n). Requires 2k < n.
Graph gen_ring_lattice(std::size_t n, std::size_t k);

/// Watts–Strogatz rewiring of the ring lattice. Lattice edges (i, i+t mod n)
/// are scanned for i = 0..n-1, then t = 1..k. With probability p_rewire the
/// far endpoint is redrawn uniformly until it is neither i nor a current
/// neighbor of i; after n failed draws the original edge is kept. The edge
/// count nk is preserved.
Graph gen_watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t seed);

/// Barabási–Albert growth from a clique on the first m_attach nodes. Each new
/// node picks m_attach distinct targets, each draw proportional to current
/// degree (uniform over existing nodes while all degrees are zero);
/// duplicate draws are rejected and redrawn. Requires 1 <= m_attach < n.
/// Edge count: C(m_attach, 2) + m_attach (n - m_attach).
Graph gen_barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed);

/// Deterministic Havel–Hakimi realization. At each step the node with the
/// largest residual degree (lowest id on ties) is joined to the nodes with
/// the next largest residual degrees (lowest id on ties). Throws
/// ParameterError naming the failing step for non-graphical sequences.
Graph gen_havel_hakimi(std::span<const std::size_t> degrees);

/// True iff the sequence is realizable by a simple graph (Erdős–Gallai).
bool is_graphical(std::span<const std::size_t> degrees);

struct BhlOptions {
    /// Probability that a follow-up link closes a triad through the
    /// previously chosen target instead of making a fresh preferential draw.
    double triad_probability = 0.9;
    std::size_t max_sequence_retries = 100;
};

/// Boccaletti–Hwang–Latora style network.
/// 1. Draw n0 degrees uniformly from {m, ..., n0 - m}; if the sum is odd,
///    increment one uniformly chosen entry; realize with gen_havel_hakimi
///    (fresh draw on failure, up to max_sequence_retries).
/// 2. Grow to n nodes. Each new node links to m distinct existing nodes: the
///    first target is chosen proportional to degree; each further target is,
///    with probability triad_probability, a uniform neighbor of the previous
///    target not yet chosen (falling back to a degree-proportional draw when
///    none is left), otherwise a degree-proportional draw.
/// Requires 1 <= m, 2m <= n0 and n0 <= n. Growth adds exactly (n - n0) m edges.
Graph gen_bhl(std::size_t n, std::size_t n0, std::size_t m, std::uint64_t seed,
              const BhlOptions& options = {});

enum class GenFamily { erdos_renyi, ring_lattice, watts_strogatz, barabasi_albert, havel_hakimi, bhl };

std::string_view to_string(GenFamily f) noexcept;
GenFamily gen_family_from_string(std::string_view name);

/// Generator request. Fields not used by a family are ignored.
///   erdos_renyi      n, p
///   ring_lattice     n, k
///   watts_strogatz   n, k, p (rewiring probability)
///   barabasi_albert  n, m (edges per new node)
///   havel_hakimi     degrees
///   bhl              n, n0, m
struct GenSpec {
    GenFamily family = GenFamily::erdos_renyi;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t n0 = 0;
    std::vector<std::size_t> degrees;
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

/// {"family": ..., "params": {...}, "seed": ...}
std::string genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(std::string_view json);

/// Key=value lines for edge-list headers, e.g. "family=watts_strogatz".
std::vector<std::string> genspec_header(const GenSpec& spec);

}  // namespace ksi
