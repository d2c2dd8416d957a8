#pragma once

#include "ksi/graph.hpp"
#include "ksi/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ksi {

enum class EigenMethod { dense_eigh, iterative };

std::string_view to_string(EigenMethod m) noexcept;

struct SpectralSummary {
    double lambda2 = 0.0;  ///< second-smallest eigenvalue of L = D - A, clamped at 0
    EigenMethod method = EigenMethod::dense_eigh;
    double residual = 0.0;  ///< ||L v - lambda2 v||_2 for the unit eigenvector v
    bool converged = true;
};

struct SpectralOptions {
    /// Dense eigensolve up to this many nodes, Lanczos above.
    std::size_t dense_limit = 2000;
    /// Forces one path regardless of size.
    std::optional<EigenMethod> method;
    double tolerance = 1e-8;
    std::size_t max_restarts = 200;
    std::uint64_t seed = 0x5eed;
};

/// Algebraic connectivity. Throws UndefinedInputError for n < 2.
/// Disconnected graphs are accepted and yield lambda2 ~ 0.
SpectralSummary algebraic_connectivity(const Graph& g, const SpectralOptions& options = {});

inline constexpr std::size_t kCheegerNodeCap = 22;

struct CheegerResult {
    Rational h;                      ///< min |E(S, S^c)| / |S| over 0 < |S| <= n/2
    std::vector<NodeId> witness;     ///< minimizing S, lexicographically smallest on ties
    std::uint64_t n_evaluated = 0;   ///< subsets examined
};

/// Exact Cheeger number by subset enumeration. Throws CapacityError above
/// kCheegerNodeCap nodes and UndefinedInputError for n < 2.
CheegerResult cheeger_exact(const Graph& g, unsigned threads = 1);

/// |E(S, S^c)| for an arbitrary node set (independent of the enumeration).
std::int64_t cut_size(const Graph& g, std::span<const NodeId> set);

/// Per-node check of n * xi_hat_i >= lambda2 and the averaged form.
struct Lambda2BoundReport {
    SpectralSummary spectral;
    std::vector<double> slack;   ///< n * xi_hat_i - lambda2
    NodeId min_slack_node = 0;
    double min_slack = 0.0;
    double average_slack = 0.0;  ///< n * Xi_hat(G) - lambda2
    std::size_t violations = 0;  ///< nodes (or the average) below -tolerance
    bool holds = true;
};

Lambda2BoundReport verify_lambda2_bound(const Graph& g, unsigned threads = 1,
                                        double tolerance = 1e-6, const SpectralOptions& options = {});

/// Cheeger-number bounds on the ksi measures, evaluated exactly.
///   (a)         d_i <= n/2  =>  xi_i >= h
///   corrected   xi_hat_i >= h / (n - d_i) if d_i <= n/2, else h / d_i
///   literal     xi_hat_i >= h (n - d_i)   if d_i <= n/2, else h d_i
/// The literal form is reported only; it is not expected to hold.
struct CheegerNodeCheck {
    NodeId node = 0;
    std::size_t degree = 0;
    Rational ksi;
    Rational ksi_normalized;
    bool item_a_applicable = false;
    bool item_a_holds = true;
    Rational corrected_rhs;
    bool corrected_holds = true;
    Rational literal_rhs;
    bool literal_holds = true;
};

struct CheegerBoundReport {
    CheegerResult cheeger;
    std::vector<CheegerNodeCheck> nodes;
    std::size_t item_a_violations = 0;
    std::size_t corrected_violations = 0;
    std::size_t literal_violations = 0;
    [[nodiscard]] bool holds() const noexcept { return item_a_violations == 0 && corrected_violations == 0; }
};

CheegerBoundReport verify_cheeger_bounds(const Graph& g, unsigned threads = 1);

}  // namespace ksi
