#include "doctest.h"

#include "ksi/error.hpp"
#include "ksi/generators.hpp"
#include "ksi/spectral.hpp"

#include "../support/oracles.hpp"

#include <cmath>

using namespace ksi;

namespace {

Graph complete(std::size_t n) { return gen_erdos_renyi(n, 1.0, 0); }

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (NodeId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

SpectralOptions forced(EigenMethod m) {
    SpectralOptions o;
    o.method = m;
    return o;
}

}  // namespace

TEST_CASE("algebraic connectivity examples") {
    for (auto m : {EigenMethod::dense_eigh, EigenMethod::iterative}) {
        CAPTURE(to_string(m));
        const auto p3 = algebraic_connectivity(path(3), forced(m));
        CHECK(p3.lambda2 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(p3.method == m);
        CHECK(p3.residual < 1e-8);
        for (std::size_t n : {2, 5, 12}) {
            CHECK(algebraic_connectivity(complete(n), forced(m)).lambda2 == doctest::Approx(double(n)).epsilon(1e-9));
        }
        const Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
        CHECK(std::abs(algebraic_connectivity(two, forced(m)).lambda2) < 1e-8);
    }
    CHECK_THROWS_AS(algebraic_connectivity(Graph::from_edges(1, {})), UndefinedInputError);
}

TEST_CASE("dense and iterative paths agree with an independent Jacobi solve") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 10 + static_cast<int>(rng() % 40);
        const auto a = oracle::random_matrix(n, 0.1 + 0.07 * rep, rng);
        const Graph g = oracle::to_graph(a);
        const double ref = oracle::lambda2(a);
        const auto dense = algebraic_connectivity(g, forced(EigenMethod::dense_eigh));
        const auto iter = algebraic_connectivity(g, forced(EigenMethod::iterative));
        CHECK(dense.lambda2 == doctest::Approx(std::max(ref, 0.0)).epsilon(1e-9).scale(1.0));
        CHECK(std::abs(iter.lambda2 - dense.lambda2) < 1e-6);
        CHECK(iter.converged);
        CHECK(iter.residual < 1e-8);
    }
}

TEST_CASE("iterative path on a larger sparse graph") {
    const Graph g = gen_watts_strogatz(600, 3, 0.2, 8);
    const auto dense = algebraic_connectivity(g, forced(EigenMethod::dense_eigh));
    const auto iter = algebraic_connectivity(g, forced(EigenMethod::iterative));
    CHECK(std::abs(iter.lambda2 - dense.lambda2) < 1e-6);
    SpectralOptions small;
    small.dense_limit = 100;
    CHECK(algebraic_connectivity(g, small).method == EigenMethod::iterative);
    CHECK(algebraic_connectivity(g).method == EigenMethod::dense_eigh);
}

TEST_CASE("Cheeger examples") {
    const auto k4 = cheeger_exact(complete(4));
    CHECK(k4.h == Rational(2));
    CHECK(k4.witness == std::vector<NodeId>{0, 1});

    const auto p4 = cheeger_exact(path(4));
    CHECK(p4.h == Rational(1, 2));
    CHECK(p4.witness == std::vector<NodeId>{0, 1});

    const Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
    const auto d = cheeger_exact(two);
    CHECK(d.h == Rational(0));
    CHECK(d.witness == std::vector<NodeId>{0, 1});

    CHECK_THROWS_AS(cheeger_exact(path(23)), CapacityError);
    CHECK_THROWS_AS(cheeger_exact(path(1)), UndefinedInputError);
}

TEST_CASE("Cheeger enumeration matches the recursive oracle on every graph with n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const auto a = oracle::from_mask(n, mask);
            const auto got = cheeger_exact(oracle::to_graph(a));
            const auto want = oracle::cheeger(a);
            REQUIRE(got.h == want.h);
            std::vector<int> w(got.witness.begin(), got.witness.end());
            REQUIRE(w == want.witness);
        }
    }
}

TEST_CASE("Cheeger witness, thread independence and the lambda2 sanity bound") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = 8 + static_cast<int>(rng() % 9);
        const auto a = oracle::random_matrix(n, 0.2 + 0.04 * rep, rng);
        const Graph g = oracle::to_graph(a);
        const auto r1 = cheeger_exact(g, 1);
        const auto r4 = cheeger_exact(g, 4);
        CHECK(r1.h == r4.h);
        CHECK(r1.witness == r4.witness);
        CHECK(r1.n_evaluated == r4.n_evaluated);
        REQUIRE(!r1.witness.empty());
        CHECK(r1.witness.size() <= static_cast<std::size_t>(n / 2));
        CHECK(Rational(cut_size(g, r1.witness), static_cast<std::int64_t>(r1.witness.size())) == r1.h);
        if (connected_components(g).size() == 1) {
            CHECK(algebraic_connectivity(g).lambda2 / 2.0 <= r1.h.to_double() + 1e-9);
        }
    }
}

TEST_CASE("lambda2 bound examples") {
    const auto k5 = verify_lambda2_bound(complete(5));
    CHECK(k5.spectral.lambda2 == doctest::Approx(5.0));
    for (double s : k5.slack) CHECK(std::abs(s) < 1e-9);
    CHECK(k5.holds);

    std::vector<Edge> e;
    for (NodeId l = 1; l < 10; ++l) e.push_back({0, l});
    const auto star = verify_lambda2_bound(Graph::from_edges(10, e));
    CHECK(star.spectral.lambda2 == doctest::Approx(1.0));
    for (double s : star.slack) CHECK(s == doctest::Approx(9.0));
    CHECK(star.average_slack == doctest::Approx(9.0));

    std::mt19937_64 rng(40);
    for (int rep = 0; rep < 50; ++rep) {
        const double p = 0.1 * (1 + rep % 9);
        const auto r = verify_lambda2_bound(oracle::to_graph(oracle::random_matrix(40, p, rng)));
        CHECK(r.violations == 0);
        CHECK(r.holds);
    }
}

TEST_CASE("Cheeger bound examples") {
    const auto k4 = verify_cheeger_bounds(complete(4));
    CHECK(k4.cheeger.h == Rational(2));
    for (const auto& c : k4.nodes) {
        CHECK_FALSE(c.item_a_applicable);
        CHECK(c.corrected_rhs == Rational(2, 3));
        CHECK(c.corrected_holds);
    }
    CHECK(k4.holds());

    const auto p4 = verify_cheeger_bounds(path(4));
    CHECK(p4.cheeger.h == Rational(1, 2));
    const auto& end = p4.nodes.front();
    CHECK(end.degree == 1);
    CHECK(end.item_a_applicable);
    CHECK(end.ksi == Rational(2));
    CHECK(end.item_a_holds);
    CHECK(p4.holds());
}

TEST_CASE("Cheeger bounds against exact oracle values") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const auto a = oracle::random_matrix(n, 0.5, rng);
        const auto r = verify_cheeger_bounds(oracle::to_graph(a));
        const auto h = oracle::cheeger(a).h;
        std::size_t lit = 0;
        for (const auto& c : r.nodes) {
            const int i = static_cast<int>(c.node);
            const int d = oracle::degree(a, i);
            CHECK(c.ksi == oracle::ksi_exact(a, i));
            CHECK(c.ksi_normalized == oracle::ksi_normalized_exact(a, i));
            const bool small = 2 * d <= n;
            CHECK(c.item_a_applicable == small);
            if (small) CHECK(c.item_a_holds == (c.ksi >= h));
            const Rational literal = small ? h * Rational(n - d) : h * Rational(d);
            CHECK(c.literal_rhs == literal);
            if (c.ksi_normalized < literal) ++lit;
        }
        CHECK(r.literal_violations == lit);
    }
}
