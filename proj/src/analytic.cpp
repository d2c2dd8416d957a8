#include "ksi/analytic.hpp"

#include "ksi/error.hpp"
#include "ksi/format.hpp"
#include "ksi/generators.hpp"

#include <algorithm>
#include <cmath>

namespace ksi {

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::star: return "star";
        case Family::windmill: return "windmill";
        case Family::wheel: return "wheel";
        case Family::nested_triangles: return "nested_triangles";
        case Family::ring_lattice: return "ring_lattice";
    }
    return "unknown";
}

Family family_from_string(std::string_view name) {
    for (auto f : {Family::star, Family::windmill, Family::wheel, Family::nested_triangles, Family::ring_lattice}) {
        if (to_string(f) == name) return f;
    }
    throw ParameterError("unknown analytic family '" + std::string(name) + "'");
}

void validate(const FamilyParams& p) {
    auto fail = [&](const std::string& rule) {
        throw ParameterError(std::string(to_string(p.family)) + " requires " + rule + ", got n=" +
                             std::to_string(p.n) + " k=" + std::to_string(p.k));
    };
    switch (p.family) {
        case Family::star:
            if (p.n < 1) fail("n >= 1");
            break;
        case Family::windmill:
            if (p.n < 1 || p.k < 2) fail("n >= 1 and k >= 2");
            break;
        case Family::wheel:
            if (p.n < 3) fail("n >= 3");
            break;
        case Family::nested_triangles:
            if (p.n < 3) fail("n >= 3");
            break;
        case Family::ring_lattice:
            if (p.k < 0 || 2 * p.k >= p.n) fail("0 <= k and 2k < n");
            break;
    }
}

std::int64_t family_node_count(const FamilyParams& p) {
    validate(p);
    switch (p.family) {
        case Family::star: return p.n + 1;
        case Family::windmill: return p.n * p.k + 1;
        case Family::wheel: return p.n + 1;
        case Family::nested_triangles: return 3 * p.n;
        case Family::ring_lattice: return p.n;
    }
    return 0;
}

namespace {

VertexClass make_class(std::string name, std::int64_t count, std::int64_t degree, std::int64_t boundary,
                       std::int64_t total_nodes) {
    VertexClass c;
    c.name = std::move(name);
    c.count = count;
    c.degree = degree;
    c.boundary = boundary;
    if (degree == 0) {
        c.ksi = Rational(1);
        c.ksi_normalized = Rational(1, total_nodes);
    } else {
        c.ksi = Rational(boundary, degree);
        c.ksi_normalized = Rational(boundary, degree * (total_nodes - degree));
    }
    return c;
}

}  // namespace

AnalyticCentrality analytic_centrality(const FamilyParams& p) {
    validate(p);
    AnalyticCentrality a;
    a.params = p;
    a.node_count = family_node_count(p);
    const std::int64_t n = p.n;
    const std::int64_t k = p.k;
    const std::int64_t total = a.node_count;
    auto& cls = a.classes;
    switch (p.family) {
        case Family::star:
            // Every edge at a neighbor leads back to the node or out of N(i).
            cls.push_back(make_class("center", 1, n, n, total));
            cls.push_back(make_class("leaf", n, 1, n, total));
            break;
        case Family::windmill:
            cls.push_back(make_class("center", 1, n * k, n * k, total));
            // Center contributes (n-1)k + 1 edges, each of the k-1 blade mates one.
            cls.push_back(make_class("blade", n * k, k, n * k, total));
            break;
        case Family::wheel:
            cls.push_back(make_class("center", 1, n, n, total));
            if (n == 3) {
                // W(3) = K4.
                a.generic_forms_apply = false;
                cls.push_back(make_class("rim", n, 3, 3, total));
            } else {
                cls.push_back(make_class("rim", n, 3, n + 2, total));
            }
            break;
        case Family::nested_triangles:
            cls.push_back(make_class("outer", 6, 3, 8, total));
            if (n == 3) {
                // The single middle triangle sees outer triangles on both sides.
                cls.push_back(make_class("middle", 3, 4, 12, total));
            } else {
                cls.push_back(make_class("second", 6, 4, 13, total));
                if (n > 4) cls.push_back(make_class("interior", 3 * (n - 4), 4, 14, total));
            }
            break;
        case Family::ring_lattice: {
            // Neighbor i+t reaches min(t, n-2k-1) nodes beyond the closed
            // neighborhood; n > 3k gives the familiar k(k+3).
            std::int64_t boundary = 2 * k;
            for (std::int64_t t = 1; t <= k; ++t) boundary += 2 * std::min(t, n - 2 * k - 1);
            a.generic_forms_apply = n > 3 * k;
            cls.push_back(make_class("vertex", n, 2 * k, boundary, total));
            break;
        }
    }
    Rational xi_sum;
    Rational xi_hat_sum;
    for (const auto& c : cls) {
        xi_sum += Rational(c.count) * c.ksi;
        xi_hat_sum += Rational(c.count) * c.ksi_normalized;
    }
    a.Xi = xi_sum / Rational(total);
    a.Xi_hat = xi_hat_sum / Rational(total);
    return a;
}

PrintedAverages printed_averages(const FamilyParams& p) {
    validate(p);
    const std::int64_t n = p.n;
    const std::int64_t k = p.k;
    PrintedAverages out;
    switch (p.family) {
        case Family::star:
            out.Xi = Rational(n * n + 1, n + 1);
            out.Xi_hat = Rational(1);
            break;
        case Family::windmill:
            out.Xi = Rational(1 + n * n * k, n * k + 1);
            out.Xi_hat = Rational(n * n + n * k + 1 - k, (n * k + 1) * (n * k + 1 - k));
            break;
        case Family::wheel:
            out.Xi = Rational(n * n + 2 * n + 3, 3 * (n + 1));
            out.Xi_hat = Rational((n + 6) * (n - 1), 3 * (n + 1) * (n - 2));
            break;
        case Family::nested_triangles:
            out.Xi = Rational(63 * n - 103, 18 * n);
            out.Xi_hat = Rational(63 * n * n - 102 * n + 7, 18 * n * (n - 1) * (3 * n - 4));
            break;
        case Family::ring_lattice:
            out.Xi = Rational(k + 3, 2);
            out.Xi_hat = Rational(k + 3, 2 * (n - 2 * k));
            break;
    }
    const auto exact = analytic_centrality(p);
    out.Xi_matches = out.Xi == exact.Xi;
    out.Xi_hat_matches = out.Xi_hat == exact.Xi_hat;
    return out;
}

FamilyGraph build_family_graph(const FamilyParams& p) {
    const auto total = static_cast<std::size_t>(family_node_count(p));
    const auto n = static_cast<std::size_t>(p.n);
    const auto k = static_cast<std::size_t>(p.k);
    std::vector<Edge> edges;
    FamilyGraph out;
    out.node_class.assign(total, 0);
    auto id = [](std::size_t v) { return static_cast<NodeId>(v); };
    switch (p.family) {
        case Family::star:
            for (std::size_t leaf = 1; leaf <= n; ++leaf) {
                edges.push_back({0, id(leaf)});
                out.node_class[leaf] = 1;
            }
            break;
        case Family::windmill:
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t base = 1 + b * k;
                for (std::size_t x = 0; x < k; ++x) {
                    edges.push_back({0, id(base + x)});
                    out.node_class[base + x] = 1;
                    for (std::size_t y = x + 1; y < k; ++y) edges.push_back({id(base + x), id(base + y)});
                }
            }
            break;
        case Family::wheel:
            for (std::size_t r = 0; r < n; ++r) {
                edges.push_back({0, id(1 + r)});
                edges.push_back({id(1 + r), id(1 + (r + 1) % n)});
                out.node_class[1 + r] = 1;
            }
            break;
        case Family::nested_triangles:
            for (std::size_t t = 0; t < n; ++t) {
                for (std::size_t c = 0; c < 3; ++c) {
                    const std::size_t v = 3 * t + c;
                    edges.push_back({id(v), id(3 * t + (c + 1) % 3)});
                    if (t + 1 < n) edges.push_back({id(v), id(v + 3)});
                    const std::size_t depth = std::min(t, n - 1 - t);
                    out.node_class[v] = std::min<std::size_t>(depth, 2);
                }
            }
            break;
        case Family::ring_lattice:
            out.graph = gen_ring_lattice(n, k);
            return out;
    }
    out.graph = Graph::from_edges(total, edges);
    return out;
}

ErExpectation er_expected(std::size_t n, double p) {
    if (n < 1) throw ParameterError("er_expected requires n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("er_expected requires 0 <= p <= 1, got " + format_float_exact(p));
    const double nn = static_cast<double>(n);
    const double q = 1.0 - p;
    ErExpectation e;
    e.n = n;
    e.p = p;
    e.e_boundary = p * (nn - 1.0) * (1.0 + p * q * (nn - 2.0));
    const double q_n1 = std::pow(q, nn - 1.0);
    e.xi_hat = p * (1.0 - q_n1) + (1.0 - std::pow(p, nn) - std::pow(q, nn) + q_n1) / nn;
    e.xi_hat_printed = p * (1.0 - q_n1) + (1.0 - std::pow(p, nn)) / nn;
    e.xi = n == 1 ? 1.0 : 1.0 + p * (nn - 1.0) * q * (1.0 - std::pow(q, nn - 2.0));
    e.Xi_hat = e.xi_hat;
    e.Xi = e.xi;
    return e;
}

ErSparseAsymptotics er_sparse_asymptotics(std::size_t n, double lambda) {
    if (n < 1) throw ParameterError("er_sparse_asymptotics requires n >= 1");
    const double nn = static_cast<double>(n);
    if (!(lambda >= 0.0 && lambda <= nn)) {
        throw ParameterError("er_sparse_asymptotics requires 0 <= lambda <= n, got " + format_float_exact(lambda));
    }
    ErSparseAsymptotics s;
    s.n = n;
    s.lambda = lambda;
    const double core = lambda * (1.0 - std::exp(-lambda));
    s.Xi_hat_approx = (1.0 + core) / nn;
    s.Xi_approx = 1.0 + core;
    const auto exact = er_expected(n, lambda / nn);
    s.Xi_hat_exact = exact.Xi_hat;
    s.Xi_exact = exact.Xi;
    s.Xi_hat_error_n2 = std::abs(s.Xi_hat_exact - s.Xi_hat_approx) * nn * nn;
    s.Xi_error_n = std::abs(s.Xi_exact - s.Xi_approx) * nn;
    return s;
}

}  // namespace ksi
