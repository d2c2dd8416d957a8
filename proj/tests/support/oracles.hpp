#pragma once

// Naive reference implementations used as oracles. Nothing here calls the
// library's computation paths; graphs are plain adjacency matrices.

#include "ksi/graph.hpp"
#include "ksi/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Adjacency matrix with the pairs (i<j) in lexicographic order switched on
/// by the bits of `mask`.
inline Matrix from_mask(int n, std::uint64_t mask) {
    Matrix a(n, std::vector<int>(n, 0));
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1U) a[i][j] = a[j][i] = 1;
        }
    }
    return a;
}

inline Matrix random_matrix(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Matrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) a[i][j] = a[j][i] = 1;
        }
    }
    return a;
}

inline ksi::Graph to_graph(const Matrix& a) {
    std::vector<ksi::Edge> edges;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a[i][j]) edges.push_back({static_cast<ksi::NodeId>(i), static_cast<ksi::NodeId>(j)});
        }
    }
    return ksi::Graph::from_edges(a.size(), edges);
}

inline Matrix to_matrix(const ksi::Graph& g) {
    const auto n = g.node_count();
    Matrix a(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

inline int degree(const Matrix& a, int i) {
    int d = 0;
    for (int x : a[i]) d += x;
    return d;
}

/// d_i plus ordered pairs (j, k): j ~ i, j ~ k, k !~ i, k != i.
inline std::int64_t boundary(const Matrix& a, int i) {
    const int n = static_cast<int>(a.size());
    std::int64_t count = degree(a, i);
    for (int j = 0; j < n; ++j) {
        if (!a[i][j]) continue;
        for (int k = 0; k < n; ++k) {
            if (a[j][k] && !a[i][k] && k != i) ++count;
        }
    }
    return count;
}

/// Edges with both endpoints in N(i).
inline std::int64_t inner_edges(const Matrix& a, int i) {
    const int n = static_cast<int>(a.size());
    std::int64_t count = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            if (a[i][j] && a[i][k] && a[j][k]) ++count;
        }
    }
    return count;
}

inline ksi::Rational ksi_exact(const Matrix& a, int i) {
    const int d = degree(a, i);
    if (d == 0) return 1;
    return {boundary(a, i), d};
}

inline ksi::Rational ksi_normalized_exact(const Matrix& a, int i) {
    const int n = static_cast<int>(a.size());
    const int d = degree(a, i);
    if (d == 0) return {1, n};
    return {boundary(a, i), static_cast<std::int64_t>(d) * (n - d)};
}

inline std::int64_t laplacian_cube_diag(const Matrix& a, int i) {
    const int n = static_cast<int>(a.size());
    auto l = [&](int x, int y) -> std::int64_t { return x == y ? degree(a, x) : -a[x][y]; };
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) s += l(i, j) * l(j, k) * l(k, i);
    }
    return s;
}

inline double clustering(const Matrix& a, int i) {
    const int d = degree(a, i);
    if (d <= 1) return 0.0;
    return 2.0 * static_cast<double>(inner_edges(a, i)) / (static_cast<double>(d) * (d - 1));
}

/// |E(S, S^c)| by a double loop over the membership vector.
inline std::int64_t cut(const Matrix& a, const std::vector<bool>& in) {
    const int n = static_cast<int>(a.size());
    std::int64_t c = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (a[u][v] && in[u] && !in[v]) ++c;
        }
    }
    return c;
}

struct Cheeger {
    ksi::Rational h;
    std::vector<int> witness;
};

/// Exact Cheeger number by recursive subset generation (lexicographic order of
/// sorted member lists); first strict minimum wins.
inline Cheeger cheeger(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    Cheeger best;
    bool have = false;
    std::vector<int> members;
    std::vector<bool> in(n, false);
    auto visit = [&](auto&& self, int next) -> void {
        if (!members.empty()) {
            const ksi::Rational r(cut(a, in), static_cast<std::int64_t>(members.size()));
            if (!have || r < best.h || (r == best.h && members < best.witness)) {
                best.h = r;
                best.witness = members;
                have = true;
            }
        }
        if (static_cast<int>(members.size()) == n / 2) return;
        for (int v = next; v < n; ++v) {
            members.push_back(v);
            in[v] = true;
            self(self, v + 1);
            in[v] = false;
            members.pop_back();
        }
    };
    visit(visit, 0);
    return best;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m) {
    const int n = static_cast<int>(m.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
        }
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double mkp = m[k][p];
                    const double mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m[p][k];
                    const double mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline double lambda2(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) l[i][j] = i == j ? degree(a, i) : -a[i][j];
    }
    return jacobi_eigenvalues(l)[1];
}

/// Exact E[f(G)] over G(n, p) by enumerating all 2^C(n,2) graphs; n <= 6.
template <typename F>
double er_exhaustive_mean(int n, double p, F&& f) {
    const int pairs = n * (n - 1) / 2;
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const int edges = __builtin_popcountll(mask);
        const double w = std::pow(p, edges) * std::pow(1.0 - p, pairs - edges);
        total += w * f(from_mask(n, mask));
    }
    return total;
}

/// Population skewness of the distribution taking a with probability q and
/// b with probability 1 - q (a != b).
inline double two_point_skewness(double a, double b, double q) {
    const double s = (1.0 - 2.0 * q) / std::sqrt(q * (1.0 - q));
    return a > b ? s : -s;
}

}  // namespace oracle
