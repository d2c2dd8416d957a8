#pragma once

#include "ksi/centrality.hpp"
#include "ksi/graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ksi {

/// Equal-width histogram; edges.size() == counts.size() + 1. The last bin is
/// closed on the right so max lands in it.
struct Histogram {
    std::vector<double> edges;
    std::vector<std::size_t> counts;
};

struct DistributionSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;  ///< sample variance, n - 1 denominator (0 when count == 1)
    /// Adjusted Fisher–Pearson G1 = g1 sqrt(n(n-1)) / (n-2); 0 for constant
    /// data and for count < 3, where it is undefined.
    double skewness = 0.0;
    double min = 0.0;
    double max = 0.0;
    Histogram histogram;
};

/// Throws UndefinedInputError on empty input and ParameterError for bins == 0.
DistributionSummary summarize(std::span<const double> values, std::size_t bins);
DistributionSummary summarize(const CentralityVector& values, std::size_t bins);

enum class Shape { right_skewed, centered, left_skewed };
std::string_view to_string(Shape s) noexcept;

struct ShapeThresholds {
    double right = 0.5;   ///< skewness above this is right-skewed
    double left = -0.5;   ///< skewness below this is left-skewed
};

/// Throws UndefinedInputError when s.count < 3.
Shape shape_classify(const DistributionSummary& s, const ShapeThresholds& thresholds = {});

/// Table-1 style row plus distribution summaries for one network.
struct NetworkReport {
    std::string graph_id;
    std::size_t n = 0;
    std::size_t m = 0;
    double Xi = 0.0;
    double Xi_hat = 0.0;
    double average_clustering = 0.0;
    DistributionSummary ksi;
    DistributionSummary ksi_normalized;
    DistributionSummary clustering;
    /// Shape of the ksi distribution; empty below 3 nodes.
    std::optional<Shape> shape_label;
    std::optional<Shape> shape_label_normalized;
};

/// Throws UndefinedInputError for the empty graph.
NetworkReport network_report(const Graph& g, std::string graph_id, std::size_t bins = 50,
                             unsigned threads = 1, const ShapeThresholds& thresholds = {});

std::string report_to_json(const NetworkReport& r);
/// "network,Xi_hat,Xi,n,m,avg_clustering,ksi_skewness,ksi_normalized_skewness,shape_label"
std::string report_csv_header();
std::string report_to_csv_row(const NetworkReport& r);
/// Two-column "bin_left,count" CSV.
std::string histogram_to_csv(const Histogram& h);

}  // namespace ksi
