#pragma once

#include "ksi/graph.hpp"
#include "ksi/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ksi {

enum class Family { star, windmill, wheel, nested_triangles, ring_lattice };

std::string_view to_string(Family f) noexcept;
Family family_from_string(std::string_view name);

/// One special graph family instance.
///   star(n)              center + n leaves                      n >= 1
///   windmill(n, k)       n copies of K_k joined to a center     n >= 1, k >= 2
///   wheel(n)             center + n-cycle rim                   n >= 3
///   nested_triangles(n)  n triangles, corresponding corners of  n >= 3
///                        consecutive triangles joined (prism)
///   ring_lattice(n, k)   circulant, degree 2k                   2k < n
struct FamilyParams {
    Family family = Family::star;
    std::int64_t n = 0;
    std::int64_t k = 0;

    static FamilyParams star(std::int64_t n) { return {Family::star, n, 0}; }
    static FamilyParams windmill(std::int64_t n, std::int64_t k) { return {Family::windmill, n, k}; }
    static FamilyParams wheel(std::int64_t n) { return {Family::wheel, n, 0}; }
    static FamilyParams nested_triangles(std::int64_t n) { return {Family::nested_triangles, n, 0}; }
    static FamilyParams ring_lattice(std::int64_t n, std::int64_t k) { return {Family::ring_lattice, n, k}; }
};

/// Throws ParameterError when the parameters are outside the family's range.
void validate(const FamilyParams& params);

std::int64_t family_node_count(const FamilyParams& params);

/// Vertices sharing the same exact ksi values.
struct VertexClass {
    std::string name;
    std::int64_t count = 0;
    std::int64_t degree = 0;
    std::int64_t boundary = 0;
    Rational ksi;
    Rational ksi_normalized;
};

struct AnalyticCentrality {
    FamilyParams params;
    std::int64_t node_count = 0;
    std::vector<VertexClass> classes;
    Rational Xi;       ///< count-weighted mean of the class ksi values
    Rational Xi_hat;   ///< count-weighted mean of the class normalized values
    /// False for the small instances where the generic per-class closed forms
    /// stop describing the graph (wheel n = 3 is K4; ring lattice with n <= 3k
    /// wraps neighborhoods onto each other). The classes above are exact in
    /// every case.
    bool generic_forms_apply = true;
};

/// Exact per-class ksi/normalized-ksi values and graph averages.
AnalyticCentrality analytic_centrality(const FamilyParams& params);

/// Averages exactly as the closed-form expressions are usually printed.
/// Two of them disagree with the class values they summarize: the windmill
/// normalized average drops the factor k on the blade sum (it equals
/// (n^2+nk+1-k)/((nk+1)(nk+1-k)) instead of (n^2 k+nk+1-k)/(...)), and the
/// nested-triangles ksi average carries 16/9 where the class sum gives 16/3.
/// `matches_classes` reports agreement with analytic_centrality.
struct PrintedAverages {
    Rational Xi;
    Rational Xi_hat;
    bool Xi_matches = true;
    bool Xi_hat_matches = true;
};
PrintedAverages printed_averages(const FamilyParams& params);

/// Deterministic builder; `node_class[v]` indexes AnalyticCentrality::classes.
struct FamilyGraph {
    Graph graph;
    std::vector<std::size_t> node_class;
};
FamilyGraph build_family_graph(const FamilyParams& params);

/// Closed-form expectations for G(n, p).
struct ErExpectation {
    std::size_t n = 0;
    double p = 0.0;
    double e_boundary = 0.0;  ///< E|E(N(i), V \ N(i))| = p(n-1)(1 + p(1-p)(n-2))
    /// E[xi_hat_i] = p(1-(1-p)^(n-1)) + (1 - p^n - (1-p)^n + (1-p)^(n-1)) / n.
    double xi_hat = 0.0;
    /// The commonly quoted p(1-(1-p)^(n-1)) + (1-p^n)/n, which omits the
    /// p(1-p)^(n-1)/n contributed by the isolated-node convention.
    double xi_hat_printed = 0.0;
    double xi = 0.0;  ///< E[xi_i] = 1 + p(n-1)(1-p)(1-(1-p)^(n-2))
    double Xi_hat = 0.0;  ///< equals xi_hat (mean of identically distributed nodes)
    double Xi = 0.0;      ///< equals xi
};

/// Throws ParameterError unless n >= 1 and 0 <= p <= 1.
ErExpectation er_expected(std::size_t n, double p);

/// Sparse regime p = lambda / n.
struct ErSparseAsymptotics {
    std::size_t n = 0;
    double lambda = 0.0;
    double Xi_hat_approx = 0.0;  ///< (1 + lambda(1 - e^-lambda)) / n
    double Xi_approx = 0.0;      ///< 1 + lambda(1 - e^-lambda)
    double Xi_hat_exact = 0.0;   ///< er_expected(n, lambda/n).Xi_hat
    double Xi_exact = 0.0;
    double Xi_hat_error_n2 = 0.0;  ///< |exact - approx| * n^2
    double Xi_error_n = 0.0;       ///< |exact - approx| * n
};

/// Throws ParameterError unless n >= 1 and 0 <= lambda <= n.
ErSparseAsymptotics er_sparse_asymptotics(std::size_t n, double lambda);

}  // namespace ksi
