#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ksi {

// Ensemble experiments over seeded random graphs. Member j of an ensemble
// with base seed s uses generator seed derive_seed(s, j + 1); results are
// reduced in member order, so they do not depend on the thread count.

/// One point of the Watts–Strogatz ratio curves.
struct RatioPoint {
    double p = 0.0;
    double xi_ratio = 0.0;      ///< mean over seeds of Xi(G_0) / Xi(G_p)
    double xi_hat_ratio = 0.0;  ///< mean over seeds of Xi_hat(G_0) / Xi_hat(G_p)
    double Xi = 0.0;            ///< mean Xi(G_p)
    double Xi_hat = 0.0;        ///< mean Xi_hat(G_p)
};

/// G_0 values come from the exact ring-lattice closed form. Graph for grid
/// point g and seed s: gen_watts_strogatz(n, k, p_g, derive_seed(s, g + 1)).
/// Throws ParameterError for 2k >= n, p outside [0, 1] or no seeds.
std::vector<RatioPoint> ratio_series_ws(std::size_t n, std::size_t k, std::span<const double> p_grid,
                                        std::span<const std::uint64_t> seeds, unsigned threads = 1);

struct BaCell {
    std::size_t n = 0;
    double k_ratio = 0.0;
    std::size_t m_attach = 0;  ///< round(k_ratio n), clamped to [1, n - 1]
    double Xi_hat = 0.0;       ///< mean over seeds
    double Xi = 0.0;
};

/// Rows ordered k_ratio-major, then by n, as given. Graph for cell c and seed
/// s: gen_barabasi_albert(n, m_attach, derive_seed(s, c + 1)).
std::vector<BaCell> ba_size_invariance(std::span<const std::size_t> n_grid, std::span<const double> k_ratio_grid,
                                       std::span<const std::uint64_t> seeds, unsigned threads = 1);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  ///< sample sd / sqrt(samples); NaN for one sample
    double expected = 0.0;
    double z = 0.0;          ///< (mean - expected) / std_error; NaN without a standard error
};

struct MonteCarloReport {
    std::size_t n = 0;
    double p = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    McEstimate e_boundary;  ///< boundary count at one uniformly chosen node per sample
    McEstimate Xi_hat;
    McEstimate Xi;
    double Xi_hat_printed_expected = 0.0;
    double Xi_hat_printed_z = 0.0;
    bool verdict_available = false;  ///< false for a single sample
    bool within_3se = false;         ///< all three |z| <= 3
};

/// Sample j: G = gen_erdos_renyi(n, p, derive_seed(seed, j + 1)); the node
/// is Rng(derive_seed(seed, j + 1), 1).below(n).
MonteCarloReport er_monte_carlo(std::size_t n, double p, std::size_t samples, std::uint64_t seed,
                                unsigned threads = 1);

}  // namespace ksi
