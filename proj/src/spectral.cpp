#include "ksi/spectral.hpp"

#include "ksi/centrality.hpp"
#include "ksi/error.hpp"
#include "ksi/parallel.hpp"
#include "ksi/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace ksi {

std::string_view to_string(EigenMethod m) noexcept {
    return m == EigenMethod::dense_eigh ? "dense_eigh" : "iterative";
}

namespace {

Eigen::MatrixXd laplacian_dense(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        l(i, i) = static_cast<double>(g.degree(i));
        for (NodeId j : g.neighbors(i)) l(i, j) = -1.0;
    }
    return l;
}

void laplacian_apply(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    for (NodeId i = 0; i < g.node_count(); ++i) {
        double acc = static_cast<double>(g.degree(i)) * x(i);
        for (NodeId j : g.neighbors(i)) acc -= x(j);
        y(i) = acc;
    }
}

double residual_norm(const Graph& g, const Eigen::VectorXd& v, double lambda) {
    Eigen::VectorXd lv(v.size());
    laplacian_apply(g, v, lv);
    return (lv - lambda * v).norm();
}

SpectralSummary dense_lambda2(const Graph& g) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_dense(g));
    if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
    SpectralSummary s;
    s.method = EigenMethod::dense_eigh;
    const double raw = solver.eigenvalues()(1);
    s.residual = residual_norm(g, solver.eigenvectors().col(1), raw);
    s.lambda2 = std::max(raw, 0.0);
    s.converged = s.residual < 1e-8;
    return s;
}

/// Removes the components along the all-ones direction and the basis columns.
void orthogonalize(Eigen::VectorXd& w, const Eigen::MatrixXd& basis, Eigen::Index cols) {
    for (int pass = 0; pass < 2; ++pass) {
        w.array() -= w.mean();
        if (cols > 0) {
            const auto v = basis.leftCols(cols);
            w -= v * (v.transpose() * w);
        }
    }
}

/// Restarted Lanczos with full reorthogonalization, working in the complement
/// of the all-ones vector so the smallest Ritz value approximates lambda2.
SpectralSummary lanczos_lambda2(const Graph& g, const SpectralOptions& opt) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::Index krylov =
        std::min<Eigen::Index>(n - 1, std::clamp<Eigen::Index>(20'000'000 / std::max<Eigen::Index>(n, 1), 20, 300));

    Rng rng(opt.seed);
    Eigen::VectorXd start(n);
    for (Eigen::Index i = 0; i < n; ++i) start(i) = rng.uniform() - 0.5;

    SpectralSummary best;
    best.method = EigenMethod::iterative;
    best.residual = INFINITY;
    best.converged = false;

    Eigen::MatrixXd basis(n, krylov);
    Eigen::VectorXd w(n);
    for (std::size_t restart = 0; restart <= opt.max_restarts; ++restart) {
        orthogonalize(start, basis, 0);
        const double norm = start.norm();
        if (norm == 0.0) break;
        basis.col(0) = start / norm;

        std::vector<double> alpha;
        std::vector<double> beta;
        Eigen::Index size = 0;
        for (Eigen::Index j = 0; j < krylov; ++j) {
            laplacian_apply(g, basis.col(j), w);
            alpha.push_back(basis.col(j).dot(w));
            size = j + 1;
            orthogonalize(w, basis, size);
            const double b = w.norm();
            if (j + 1 == krylov || b < 1e-12) break;
            beta.push_back(b);
            basis.col(j + 1) = w / b;
        }

        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(size, size);
        for (Eigen::Index i = 0; i < size; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < size) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
        const double theta = tri.eigenvalues()(0);
        Eigen::VectorXd ritz = basis.leftCols(size) * tri.eigenvectors().col(0);
        ritz.normalize();
        const double res = residual_norm(g, ritz, theta);
        if (res < best.residual) {
            best.residual = res;
            best.lambda2 = std::max(theta, 0.0);
        }
        if (res < opt.tolerance) {
            best.converged = true;
            break;
        }
        start = ritz;
    }
    return best;
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
    // Compares the ascending member lists of two subsets lexicographically.
    while (a != b) {
        if (a == 0) return true;
        if (b == 0) return false;
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

struct CutCandidate {
    std::uint32_t mask = 0;
    std::int64_t cut = 0;
    std::int64_t size = 0;
};

bool better(const CutCandidate& x, const CutCandidate& y) {
    if (y.mask == 0) return x.mask != 0;
    if (x.mask == 0) return false;
    const std::int64_t lhs = x.cut * y.size;
    const std::int64_t rhs = y.cut * x.size;
    if (lhs != rhs) return lhs < rhs;
    return lex_less(x.mask, y.mask);
}

}  // namespace

SpectralSummary algebraic_connectivity(const Graph& g, const SpectralOptions& options) {
    if (g.node_count() < 2) throw UndefinedInputError("algebraic connectivity requires n >= 2");
    const EigenMethod method = options.method.value_or(
        g.node_count() <= options.dense_limit ? EigenMethod::dense_eigh : EigenMethod::iterative);
    return method == EigenMethod::dense_eigh ? dense_lambda2(g) : lanczos_lambda2(g, options);
}

std::int64_t cut_size(const Graph& g, std::span<const NodeId> set) {
    std::vector<bool> in(g.node_count(), false);
    for (NodeId v : set) {
        g.check_node(v);
        in[v] = true;
    }
    std::int64_t cut = 0;
    for (NodeId v : set) {
        for (NodeId u : g.neighbors(v)) cut += in[u] ? 0 : 1;
    }
    return cut;
}

CheegerResult cheeger_exact(const Graph& g, unsigned threads) {
    const std::size_t n = g.node_count();
    if (n > kCheegerNodeCap) {
        throw CapacityError("exact Cheeger enumeration limited to " + std::to_string(kCheegerNodeCap) +
                            " nodes (graph has " + std::to_string(n) + "); use the lambda2-based bounds instead");
    }
    if (n < 2) throw UndefinedInputError("Cheeger number requires n >= 2");

    std::vector<std::uint32_t> adj(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j : g.neighbors(i)) adj[i] |= std::uint32_t{1} << j;
    }
    const std::uint32_t full = n == 32 ? ~0U : (std::uint32_t{1} << n) - 1;
    const int half = static_cast<int>(n / 2);
    const std::uint64_t total = std::uint64_t{1} << n;

    const std::size_t chunks = std::max<std::size_t>(threads, 1) * 8;
    std::vector<CutCandidate> best(chunks);
    std::vector<std::uint64_t> evaluated(chunks, 0);
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::uint64_t begin = std::max<std::uint64_t>(1, total * c / chunks);
        const std::uint64_t end = total * (c + 1) / chunks;
        CutCandidate local;
        std::uint64_t count = 0;
        for (std::uint64_t m = begin; m < end; ++m) {
            const auto mask = static_cast<std::uint32_t>(m);
            const int size = std::popcount(mask);
            if (size > half) continue;
            ++count;
            const std::uint32_t outside = full & ~mask;
            std::int64_t cut = 0;
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                cut += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & outside);
            }
            const CutCandidate cand{mask, cut, size};
            if (better(cand, local)) local = cand;
        }
        best[c] = local;
        evaluated[c] = count;
    });

    CutCandidate winner;
    CheegerResult result;
    for (std::size_t c = 0; c < chunks; ++c) {
        if (better(best[c], winner)) winner = best[c];
        result.n_evaluated += evaluated[c];
    }
    result.h = Rational(winner.cut, winner.size);
    for (std::uint32_t rest = winner.mask; rest != 0; rest &= rest - 1) {
        result.witness.push_back(static_cast<NodeId>(std::countr_zero(rest)));
    }
    return result;
}

Lambda2BoundReport verify_lambda2_bound(const Graph& g, unsigned threads, double tolerance,
                                        const SpectralOptions& options) {
    Lambda2BoundReport r;
    r.spectral = algebraic_connectivity(g, options);
    const auto xi_hat = ksi_normalized_vector(g, threads);
    const double n = static_cast<double>(g.node_count());
    const double lambda2 = r.spectral.lambda2;
    r.slack.resize(xi_hat.values.size());
    r.min_slack = INFINITY;
    for (std::size_t i = 0; i < r.slack.size(); ++i) {
        r.slack[i] = n * xi_hat.values[i] - lambda2;
        if (r.slack[i] < r.min_slack) {
            r.min_slack = r.slack[i];
            r.min_slack_node = static_cast<NodeId>(i);
        }
        if (r.slack[i] < -tolerance) ++r.violations;
    }
    r.average_slack = n * xi_hat.mean() - lambda2;
    if (r.average_slack < -tolerance) ++r.violations;
    r.holds = r.violations == 0;
    return r;
}

CheegerBoundReport verify_cheeger_bounds(const Graph& g, unsigned threads) {
    CheegerBoundReport r;
    r.cheeger = cheeger_exact(g, threads);
    const Rational h = r.cheeger.h;
    const auto counts = neighborhood_counts(g, threads);
    const auto n = static_cast<std::int64_t>(g.node_count());
    r.nodes.reserve(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) {
        CheegerNodeCheck c;
        c.node = i;
        c.degree = g.degree(i);
        const auto d = static_cast<std::int64_t>(c.degree);
        const std::int64_t b = counts.boundary[i];
        c.ksi = d == 0 ? Rational(1) : Rational(b, d);
        c.ksi_normalized = d == 0 ? Rational(1, n) : Rational(b, d * (n - d));
        const bool small_degree = 2 * d <= n;
        c.item_a_applicable = small_degree;
        c.item_a_holds = !small_degree || c.ksi >= h;
        c.corrected_rhs = small_degree ? h / Rational(n - d) : h / Rational(d);
        c.corrected_holds = c.ksi_normalized >= c.corrected_rhs;
        c.literal_rhs = small_degree ? h * Rational(n - d) : h * Rational(d);
        c.literal_holds = c.ksi_normalized >= c.literal_rhs;
        r.item_a_violations += c.item_a_holds ? 0 : 1;
        r.corrected_violations += c.corrected_holds ? 0 : 1;
        r.literal_violations += c.literal_holds ? 0 : 1;
        r.nodes.push_back(c);
    }
    return r;
}

}  // namespace ksi
