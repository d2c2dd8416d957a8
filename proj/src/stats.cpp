#include "ksi/stats.hpp"

#include "ksi/error.hpp"
#include "ksi/format.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ksi {

DistributionSummary summarize(std::span<const double> values, std::size_t bins) {
    if (values.empty()) throw UndefinedInputError("cannot summarize an empty vector");
    if (bins == 0) throw ParameterError("histogram needs at least one bin");
    DistributionSummary s;
    s.count = values.size();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    const double n = static_cast<double>(s.count);

    s.mean = mean_of(values);

    if (s.min != s.max) {
        double m2 = 0.0;
        double m3 = 0.0;
        for (double v : values) {
            const double d = v - s.mean;
            m2 += d * d;
            m3 += d * d * d;
        }
        s.variance = s.count > 1 ? m2 / (n - 1.0) : 0.0;
        m2 /= n;
        m3 /= n;
        if (s.count >= 3 && m2 > 0.0) {
            const double g1 = m3 / std::pow(m2, 1.5);
            s.skewness = g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
        }
    }

    auto& h = s.histogram;
    if (s.min == s.max) {
        h.edges = {s.min, s.max};
        h.counts = {s.count};
        return s;
    }
    h.edges.resize(bins + 1);
    h.counts.assign(bins, 0);
    const double width = (s.max - s.min) / static_cast<double>(bins);
    for (std::size_t b = 0; b < bins; ++b) h.edges[b] = s.min + width * static_cast<double>(b);
    h.edges[bins] = s.max;
    for (double v : values) {
        auto b = static_cast<std::size_t>((v - s.min) / width);
        h.counts[std::min(b, bins - 1)]++;
    }
    return s;
}

DistributionSummary summarize(const CentralityVector& values, std::size_t bins) {
    return summarize(std::span<const double>(values.values), bins);
}

std::string_view to_string(Shape s) noexcept {
    switch (s) {
        case Shape::right_skewed: return "right_skewed";
        case Shape::centered: return "centered";
        case Shape::left_skewed: return "left_skewed";
    }
    return "unknown";
}

Shape shape_classify(const DistributionSummary& s, const ShapeThresholds& t) {
    if (s.count < 3) throw UndefinedInputError("shape classification needs at least 3 values");
    if (s.skewness > t.right) return Shape::right_skewed;
    if (s.skewness < t.left) return Shape::left_skewed;
    return Shape::centered;
}

NetworkReport network_report(const Graph& g, std::string graph_id, std::size_t bins, unsigned threads,
                             const ShapeThresholds& thresholds) {
    if (g.node_count() == 0) throw UndefinedInputError("network report needs at least one node");
    const auto table = centrality_table(g, threads);
    NetworkReport r;
    r.graph_id = std::move(graph_id);
    r.n = g.node_count();
    r.m = g.edge_count();
    r.ksi = summarize(table.ksi, bins);
    r.ksi_normalized = summarize(table.ksi_normalized, bins);
    r.clustering = summarize(table.clustering, bins);
    r.Xi = r.ksi.mean;
    r.Xi_hat = r.ksi_normalized.mean;
    r.average_clustering = r.clustering.mean;
    if (r.n >= 3) {
        r.shape_label = shape_classify(r.ksi, thresholds);
        r.shape_label_normalized = shape_classify(r.ksi_normalized, thresholds);
    }
    return r;
}

namespace {

nlohmann::ordered_json summary_json(const DistributionSummary& s) {
    return {{"count", s.count},
            {"mean", s.mean},
            {"variance", s.variance},
            {"skewness", s.skewness},
            {"min", s.min},
            {"max", s.max},
            {"histogram", {{"edges", s.histogram.edges}, {"counts", s.histogram.counts}}}};
}

nlohmann::ordered_json shape_json(const std::optional<Shape>& s) {
    if (!s) return nullptr;
    return std::string(to_string(*s));
}

}  // namespace

std::string report_to_json(const NetworkReport& r) {
    const nlohmann::ordered_json j = {{"network", r.graph_id},
                                      {"n", r.n},
                                      {"m", r.m},
                                      {"Xi_hat", r.Xi_hat},
                                      {"Xi", r.Xi},
                                      {"average_clustering", r.average_clustering},
                                      {"shape_label", shape_json(r.shape_label)},
                                      {"shape_label_normalized", shape_json(r.shape_label_normalized)},
                                      {"ksi", summary_json(r.ksi)},
                                      {"ksi_normalized", summary_json(r.ksi_normalized)},
                                      {"clustering", summary_json(r.clustering)}};
    return j.dump(2);
}

std::string report_csv_header() {
    return "network,Xi_hat,Xi,n,m,avg_clustering,ksi_skewness,ksi_normalized_skewness,shape_label";
}

std::string report_to_csv_row(const NetworkReport& r) {
    std::ostringstream out;
    out << r.graph_id << ',' << format_float(r.Xi_hat) << ',' << format_float(r.Xi) << ',' << r.n << ',' << r.m << ','
        << format_float(r.average_clustering) << ',' << format_float(r.ksi.skewness) << ','
        << format_float(r.ksi_normalized.skewness) << ','
        << (r.shape_label ? to_string(*r.shape_label) : std::string_view("undefined"));
    return out.str();
}

std::string histogram_to_csv(const Histogram& h) {
    std::ostringstream out;
    out << "bin_left,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) out << format_float(h.edges[b]) << ',' << h.counts[b] << '\n';
    return out.str();
}

}  // namespace ksi
