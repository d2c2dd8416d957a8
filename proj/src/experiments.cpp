#include "ksi/experiments.hpp"

#include "ksi/analytic.hpp"
#include "ksi/centrality.hpp"
#include "ksi/error.hpp"
#include "ksi/generators.hpp"
#include "ksi/parallel.hpp"
#include "ksi/rng.hpp"

#include <cmath>
#include <limits>

namespace ksi {

namespace {

struct Averages {
    double Xi = 0.0;
    double Xi_hat = 0.0;
};

Averages graph_averages(const Graph& g) {
    const auto t = centrality_table(g);
    return {t.ksi.mean(), t.ksi_normalized.mean()};
}

McEstimate estimate(const std::vector<double>& xs, double expected) {
    McEstimate e;
    e.expected = expected;
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    e.mean = sum / n;
    if (xs.size() < 2) {
        e.std_error = std::numeric_limits<double>::quiet_NaN();
        e.z = std::numeric_limits<double>::quiet_NaN();
        return e;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - e.mean) * (x - e.mean);
    e.std_error = std::sqrt(ss / (n - 1.0) / n);
    const double diff = e.mean - expected;
    if (e.std_error > 0.0) {
        e.z = diff / e.std_error;
    } else {
        const double scale = std::max(1.0, std::abs(expected));
        e.z = std::abs(diff) <= 1e-12 * scale ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return e;
}

}  // namespace

std::vector<RatioPoint> ratio_series_ws(std::size_t n, std::size_t k, std::span<const double> p_grid,
                                        std::span<const std::uint64_t> seeds, unsigned threads) {
    if (seeds.empty()) throw ParameterError("ratio_series_ws needs at least one seed");
    for (double p : p_grid) {
        if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("rewiring probabilities must lie in [0, 1]");
    }
    const auto lattice = analytic_centrality(
        FamilyParams::ring_lattice(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
    const double xi0 = lattice.Xi.to_double();
    const double xi_hat0 = lattice.Xi_hat.to_double();

    const std::size_t s_count = seeds.size();
    std::vector<Averages> results(p_grid.size() * s_count);
    parallel_for(results.size(), threads, [&](std::size_t job) {
        const std::size_t g = job / s_count;
        const std::size_t s = job % s_count;
        results[job] = graph_averages(gen_watts_strogatz(n, k, p_grid[g], derive_seed(seeds[s], g + 1)));
    });

    std::vector<RatioPoint> out;
    out.reserve(p_grid.size());
    for (std::size_t g = 0; g < p_grid.size(); ++g) {
        RatioPoint pt;
        pt.p = p_grid[g];
        for (std::size_t s = 0; s < s_count; ++s) {
            const auto& a = results[g * s_count + s];
            pt.xi_ratio += xi0 / a.Xi;
            pt.xi_hat_ratio += xi_hat0 / a.Xi_hat;
            pt.Xi += a.Xi;
            pt.Xi_hat += a.Xi_hat;
        }
        const double c = static_cast<double>(s_count);
        pt.xi_ratio /= c;
        pt.xi_hat_ratio /= c;
        pt.Xi /= c;
        pt.Xi_hat /= c;
        out.push_back(pt);
    }
    return out;
}

std::vector<BaCell> ba_size_invariance(std::span<const std::size_t> n_grid, std::span<const double> k_ratio_grid,
                                       std::span<const std::uint64_t> seeds, unsigned threads) {
    if (seeds.empty()) throw ParameterError("ba_size_invariance needs at least one seed");
    std::vector<BaCell> cells;
    for (double ratio : k_ratio_grid) {
        if (!(ratio > 0.0 && ratio < 1.0)) throw ParameterError("k/n ratios must lie in (0, 1)");
        for (std::size_t n : n_grid) {
            if (n < 2) throw ParameterError("Barabasi-Albert grid needs n >= 2");
            BaCell c;
            c.n = n;
            c.k_ratio = ratio;
            const auto m = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
            c.m_attach = std::clamp<std::size_t>(m, 1, n - 1);
            cells.push_back(c);
        }
    }
    const std::size_t s_count = seeds.size();
    std::vector<Averages> results(cells.size() * s_count);
    parallel_for(results.size(), threads, [&](std::size_t job) {
        const std::size_t c = job / s_count;
        const std::size_t s = job % s_count;
        results[job] = graph_averages(gen_barabasi_albert(cells[c].n, cells[c].m_attach, derive_seed(seeds[s], c + 1)));
    });
    for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t s = 0; s < s_count; ++s) {
            cells[c].Xi += results[c * s_count + s].Xi;
            cells[c].Xi_hat += results[c * s_count + s].Xi_hat;
        }
        cells[c].Xi /= static_cast<double>(s_count);
        cells[c].Xi_hat /= static_cast<double>(s_count);
    }
    return cells;
}

MonteCarloReport er_monte_carlo(std::size_t n, double p, std::size_t samples, std::uint64_t seed, unsigned threads) {
    if (samples < 1) throw ParameterError("Monte Carlo needs at least one sample");
    const auto expected = er_expected(n, p);

    std::vector<double> boundary(samples);
    std::vector<double> xi_hat(samples);
    std::vector<double> xi(samples);
    parallel_for(samples, threads, [&](std::size_t j) {
        const std::uint64_t member = derive_seed(seed, j + 1);
        const Graph g = gen_erdos_renyi(n, p, member);
        const auto t = centrality_table(g);
        Rng pick(member, 1);
        const auto node = static_cast<std::size_t>(pick.below(n));
        boundary[j] = static_cast<double>(t.counts.boundary[node]);
        xi_hat[j] = t.ksi_normalized.mean();
        xi[j] = t.ksi.mean();
    });

    MonteCarloReport r;
    r.n = n;
    r.p = p;
    r.samples = samples;
    r.seed = seed;
    r.e_boundary = estimate(boundary, expected.e_boundary);
    r.Xi_hat = estimate(xi_hat, expected.Xi_hat);
    r.Xi = estimate(xi, expected.Xi);
    r.Xi_hat_printed_expected = expected.xi_hat_printed;
    r.Xi_hat_printed_z = estimate(xi_hat, expected.xi_hat_printed).z;
    r.verdict_available = samples >= 2;
    r.within_3se = r.verdict_available && std::abs(r.e_boundary.z) <= 3.0 && std::abs(r.Xi_hat.z) <= 3.0 &&
                   std::abs(r.Xi.z) <= 3.0;
    return r;
}

}  // namespace ksi
