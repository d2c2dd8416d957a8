#include "cli.hpp"

#include "ksi/analytic.hpp"
#include "ksi/centrality.hpp"
#include "ksi/error.hpp"
#include "ksi/experiments.hpp"
#include "ksi/format.hpp"
#include "ksi/generators.hpp"
#include "ksi/graph.hpp"
#include "ksi/spectral.hpp"
#include "ksi/stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace ksi::cli {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

/// Bad command line or input that the user has to fix; exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) { return format_float(v); }

ojson json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

ojson json_rational(const Rational& r) { return {{"exact", r.to_string()}, {"value", r.to_double()}}; }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, sep)) {
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

/// Destination for machine-readable output: a file when a path is given.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        stream_ = &file_;
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

enum class Format { csv, json };

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw UsageError("unknown format '" + s + "' (expected csv or json)");
}

struct Common {
    std::string output;
    std::string format = "csv";
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
    cmd->add_option("-o,--output", c.output, "Output file (default: standard output)");
    if (with_format) cmd->add_option("--format", c.format, "Output format: csv or json")->capture_default_str();
    cmd->add_option("--threads", c.threads, "Worker threads; results do not depend on it")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

// ---------------------------------------------------------------------------
// Graph sources: an edge-list file or a generator spec.

struct GenFlags {
    std::string family;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t n0 = 0;
    std::string degrees;
    std::uint64_t seed = 0;
    std::string spec;
};

void add_gen_flags(CLI::App* cmd, GenFlags& g) {
    cmd->add_option("--family", g.family,
                    "Generator: erdos_renyi, ring_lattice, watts_strogatz, barabasi_albert, havel_hakimi, bhl");
    cmd->add_option("-n,--n", g.n, "Number of nodes");
    cmd->add_option("-p,--p", g.p, "Edge or rewiring probability");
    cmd->add_option("-k,--k", g.k, "Ring-lattice neighbors per side");
    cmd->add_option("-m,--m", g.m, "Edges per new node");
    cmd->add_option("--n0", g.n0, "Initial nodes (bhl)");
    cmd->add_option("--degrees", g.degrees, "Comma-separated degree sequence (havel_hakimi)");
    cmd->add_option("--seed", g.seed, "Generator seed")->capture_default_str();
    cmd->add_option("--spec", g.spec, "Generator spec as JSON text or a path to a JSON file");
}

bool gen_requested(const GenFlags& g) { return !g.family.empty() || !g.spec.empty(); }

GenSpec to_spec(const GenFlags& g) {
    if (!g.spec.empty()) {
        if (!g.family.empty()) throw UsageError("--spec and --family are mutually exclusive");
        std::string text = g.spec;
        if (text.find('{') == std::string::npos) {
            std::ifstream in(text);
            if (!in) throw UsageError("cannot open spec file '" + text + "'");
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return genspec_from_json(text);
    }
    GenSpec s;
    s.family = gen_family_from_string(g.family);
    s.n = g.n;
    s.p = g.p;
    s.k = g.k;
    s.m = g.m;
    s.n0 = g.n0;
    s.seed = g.seed;
    for (const auto& tok : split(g.degrees, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || tok.front() == '-') throw UsageError("invalid degree '" + tok + "' in --degrees");
        s.degrees.push_back(static_cast<std::size_t>(v));
    }
    return s;
}

struct Source {
    Graph graph;
    std::vector<std::uint64_t> labels;
    std::string id;
};

Source load_source(const std::string& input, const GenFlags& gen, std::ostream& err) {
    Source src;
    if (!input.empty()) {
        if (gen_requested(gen)) throw UsageError("give either --input or a generator spec, not both");
        if (!fs::exists(input)) throw UsageError("input file '" + input + "' does not exist");
        ParsedGraph parsed;
        try {
            parsed = read_edge_list_file(input);
        } catch (const ParseError& e) {
            throw UsageError(input + ": " + e.what());
        }
        if (parsed.stats.self_loops_dropped + parsed.stats.duplicates_dropped > 0) {
            err << "ksi: " << input << ": dropped " << parsed.stats.self_loops_dropped << " self-loops and "
                << parsed.stats.duplicates_dropped << " duplicate edges\n";
        }
        src.graph = std::move(parsed.graph);
        src.labels = std::move(parsed.labels);
        src.id = fs::path(input).stem().string();
        return src;
    }
    if (!gen_requested(gen)) throw UsageError("no graph given: use --input FILE or --family/--spec");
    const GenSpec spec = to_spec(gen);
    src.graph = generate(spec);
    src.labels.resize(src.graph.node_count());
    for (std::size_t i = 0; i < src.labels.size(); ++i) src.labels[i] = i;
    src.id = std::string(to_string(spec.family));
    return src;
}

// ---------------------------------------------------------------------------
// compute

struct ComputeFlags {
    Common common;
    std::string input;
    GenFlags gen;
    std::string measures = "xi,xi_norm,clustering";
};

struct MeasureSet {
    bool xi = false;
    bool xi_norm = false;
    bool clustering = false;
};

MeasureSet parse_measures(const std::string& text) {
    MeasureSet m;
    for (const auto& name : split(text, ',')) {
        if (name == "xi" || name == "ksi") {
            m.xi = true;
        } else if (name == "xi_norm" || name == "ksi_normalized") {
            m.xi_norm = true;
        } else if (name == "clustering") {
            m.clustering = true;
        } else {
            throw UsageError("unknown measure '" + name + "' (expected xi, xi_norm, clustering)");
        }
    }
    if (!m.xi && !m.xi_norm && !m.clustering) throw UsageError("--measures selects nothing");
    return m;
}

int cmd_compute(const ComputeFlags& f, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(f.common.format);
    const MeasureSet ms = parse_measures(f.measures);
    const Source src = load_source(f.input, f.gen, err);
    const Graph& g = src.graph;
    if (g.node_count() == 0) throw UsageError("graph has no nodes");
    const auto t = centrality_table(g, f.common.threads);
    const std::size_t n = g.node_count();

    Sink sink(f.common.output, out);
    if (format == Format::csv) {
        std::ostream& o = *sink;
        o << "original_label,degree";
        if (ms.xi) o << ",xi";
        if (ms.xi_norm) o << ",xi_norm";
        if (ms.clustering) o << ",clustering";
        o << ",boundary_count\n";
        for (NodeId i = 0; i < n; ++i) {
            o << src.labels[i] << ',' << g.degree(i);
            if (ms.xi) o << ',' << fmt(t.ksi.values[i]);
            if (ms.xi_norm) o << ',' << fmt(t.ksi_normalized.values[i]);
            if (ms.clustering) o << ',' << fmt(t.clustering.values[i]);
            o << ',' << t.counts.boundary[i] << '\n';
        }
        o << "# summary: n=" << n << " m=" << g.edge_count() << " Xi=" << fmt(t.ksi.mean())
          << " Xi_hat=" << fmt(t.ksi_normalized.mean()) << " avg_clustering=" << fmt(t.clustering.mean()) << '\n';
    } else {
        ojson nodes = ojson::array();
        for (NodeId i = 0; i < n; ++i) {
            ojson row = {{"original_label", src.labels[i]}, {"degree", g.degree(i)}};
            if (ms.xi) row["xi"] = t.ksi.values[i];
            if (ms.xi_norm) row["xi_norm"] = t.ksi_normalized.values[i];
            if (ms.clustering) row["clustering"] = t.clustering.values[i];
            row["boundary_count"] = t.counts.boundary[i];
            nodes.push_back(std::move(row));
        }
        const ojson doc = {{"n", n},
                           {"m", g.edge_count()},
                           {"Xi", t.ksi.mean()},
                           {"Xi_hat", t.ksi_normalized.mean()},
                           {"average_clustering", t.clustering.mean()},
                           {"nodes", std::move(nodes)}};
        *sink << doc.dump(2) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateFlags {
    std::string output;
    GenFlags gen;
};

int cmd_generate(const GenerateFlags& f, std::ostream& out, std::ostream& err) {
    if (!gen_requested(f.gen)) throw UsageError("generate needs --family or --spec");
    const GenSpec spec = to_spec(f.gen);
    const Graph g = generate(spec);
    const auto header = genspec_header(spec);
    Sink sink(f.output, out);
    write_edge_list(*sink, g, header);
    err << "ksi: generated " << to_string(spec.family) << " graph with " << g.node_count() << " nodes and "
        << g.edge_count() << " edges\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analytic

struct AnalyticFlags {
    Common common;
    std::string family;
    std::int64_t n = 0;
    std::int64_t k = 0;
};

int cmd_analytic(const AnalyticFlags& f, std::ostream& out, std::ostream&) {
    const Format format = parse_format(f.common.format);
    const FamilyParams params{family_from_string(f.family), f.n, f.k};
    const auto a = analytic_centrality(params);
    const auto printed = printed_averages(params);
    Sink sink(f.common.output, out);
    if (format == Format::csv) {
        std::ostream& o = *sink;
        o << "class,count,degree,boundary_count,xi,xi_exact,xi_norm,xi_norm_exact\n";
        for (const auto& c : a.classes) {
            o << c.name << ',' << c.count << ',' << c.degree << ',' << c.boundary << ',' << fmt(c.ksi.to_double())
              << ',' << c.ksi.to_string() << ',' << fmt(c.ksi_normalized.to_double()) << ','
              << c.ksi_normalized.to_string() << '\n';
        }
        o << "# summary: family=" << to_string(params.family) << " n=" << params.n << " k=" << params.k
          << " nodes=" << a.node_count << " Xi=" << a.Xi.to_string() << " Xi_hat=" << a.Xi_hat.to_string()
          << " printed_Xi=" << printed.Xi.to_string() << " printed_Xi_hat=" << printed.Xi_hat.to_string() << '\n';
    } else {
        ojson classes = ojson::array();
        for (const auto& c : a.classes) {
            classes.push_back({{"class", c.name},
                               {"count", c.count},
                               {"degree", c.degree},
                               {"boundary_count", c.boundary},
                               {"xi", json_rational(c.ksi)},
                               {"xi_norm", json_rational(c.ksi_normalized)}});
        }
        const ojson doc = {{"family", to_string(params.family)},
                           {"n", params.n},
                           {"k", params.k},
                           {"node_count", a.node_count},
                           {"generic_forms_apply", a.generic_forms_apply},
                           {"Xi", json_rational(a.Xi)},
                           {"Xi_hat", json_rational(a.Xi_hat)},
                           {"printed",
                            {{"Xi", json_rational(printed.Xi)},
                             {"Xi_hat", json_rational(printed.Xi_hat)},
                             {"Xi_matches", printed.Xi_matches},
                             {"Xi_hat_matches", printed.Xi_hat_matches}}},
                           {"classes", std::move(classes)}};
        *sink << doc.dump(2) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// expected

struct ExpectedFlags {
    Common common;
    std::size_t n = 0;
    std::optional<double> p;
    std::optional<double> lambda;
};

int cmd_expected(const ExpectedFlags& f, std::ostream& out, std::ostream&) {
    const Format format = parse_format(f.common.format);
    if (f.p.has_value() == f.lambda.has_value()) throw UsageError("expected needs exactly one of --p and --lambda");
    Sink sink(f.common.output, out);
    if (f.p) {
        const auto e = er_expected(f.n, *f.p);
        if (format == Format::csv) {
            *sink << "n,p,e_boundary,xi_hat,xi_hat_printed,xi\n"
                  << e.n << ',' << fmt(e.p) << ',' << fmt(e.e_boundary) << ',' << fmt(e.xi_hat) << ','
                  << fmt(e.xi_hat_printed) << ',' << fmt(e.xi) << '\n';
        } else {
            const ojson doc = {{"n", e.n},
                               {"p", e.p},
                               {"e_boundary", e.e_boundary},
                               {"Xi_hat", e.Xi_hat},
                               {"Xi_hat_printed", e.xi_hat_printed},
                               {"Xi", e.Xi}};
            *sink << doc.dump(2) << '\n';
        }
        return kExitOk;
    }
    const auto a = er_sparse_asymptotics(f.n, *f.lambda);
    if (format == Format::csv) {
        *sink << "n,lambda,Xi_hat_exact,Xi_hat_approx,Xi_hat_error_n2,Xi_exact,Xi_approx,Xi_error_n\n"
              << a.n << ',' << fmt(a.lambda) << ',' << fmt(a.Xi_hat_exact) << ',' << fmt(a.Xi_hat_approx) << ','
              << fmt(a.Xi_hat_error_n2) << ',' << fmt(a.Xi_exact) << ',' << fmt(a.Xi_approx) << ','
              << fmt(a.Xi_error_n) << '\n';
    } else {
        const ojson doc = {{"n", a.n},
                           {"lambda", a.lambda},
                           {"Xi_hat_exact", a.Xi_hat_exact},
                           {"Xi_hat_approx", a.Xi_hat_approx},
                           {"Xi_hat_error_n2", a.Xi_hat_error_n2},
                           {"Xi_exact", a.Xi_exact},
                           {"Xi_approx", a.Xi_approx},
                           {"Xi_error_n", a.Xi_error_n}};
        *sink << doc.dump(2) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
    Common common;
    std::string input;
    GenFlags gen;
    double tolerance = 1e-6;
    std::size_t dense_limit = SpectralOptions{}.dense_limit;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
    if (parse_format(f.common.format) != Format::json) throw UsageError("verify writes JSON only; use --format json");
    const Source src = load_source(f.input, f.gen, err);
    const Graph& g = src.graph;
    const std::size_t n = g.node_count();
    bool all_hold = true;

    ojson lambda;
    if (n < 2) {
        lambda = {{"status", "skipped"}, {"reason", "algebraic connectivity needs at least 2 nodes"}};
    } else {
        SpectralOptions opts;
        opts.dense_limit = f.dense_limit;
        const auto r = verify_lambda2_bound(g, f.common.threads, f.tolerance, opts);
        all_hold = all_hold && r.holds;
        ojson slack = ojson::array();
        for (NodeId i = 0; i < n; ++i) slack.push_back({{"label", src.labels[i]}, {"slack", r.slack[i]}});
        lambda = {{"status", "checked"},
                  {"lambda2", r.spectral.lambda2},
                  {"method", to_string(r.spectral.method)},
                  {"residual", r.spectral.residual},
                  {"converged", r.spectral.converged},
                  {"tolerance", f.tolerance},
                  {"min_slack", r.min_slack},
                  {"min_slack_label", src.labels[r.min_slack_node]},
                  {"average_slack", r.average_slack},
                  {"violations", r.violations},
                  {"holds", r.holds},
                  {"nodes", std::move(slack)}};
    }

    ojson cheeger;
    if (n < 2) {
        cheeger = {{"status", "skipped"}, {"reason", "Cheeger number needs at least 2 nodes"}};
    } else if (n > kCheegerNodeCap) {
        cheeger = {{"status", "skipped"},
                   {"reason", "exact Cheeger enumeration is limited to " + std::to_string(kCheegerNodeCap) +
                                  " nodes; graph has " + std::to_string(n)}};
        err << "ksi: Cheeger check skipped (n=" << n << " > " << kCheegerNodeCap << ")\n";
    } else {
        const auto r = verify_cheeger_bounds(g, f.common.threads);
        all_hold = all_hold && r.holds();
        ojson witness = ojson::array();
        for (NodeId v : r.cheeger.witness) witness.push_back(src.labels[v]);
        ojson nodes = ojson::array();
        for (const auto& c : r.nodes) {
            nodes.push_back({{"label", src.labels[c.node]},
                             {"degree", c.degree},
                             {"xi", json_rational(c.ksi)},
                             {"xi_norm", json_rational(c.ksi_normalized)},
                             {"item_a_applicable", c.item_a_applicable},
                             {"item_a_holds", c.item_a_holds},
                             {"corrected_rhs", json_rational(c.corrected_rhs)},
                             {"corrected_holds", c.corrected_holds},
                             {"literal_rhs", json_rational(c.literal_rhs)},
                             {"literal_holds", c.literal_holds}});
        }
        cheeger = {{"status", "checked"},
                   {"h", json_rational(r.cheeger.h)},
                   {"witness", std::move(witness)},
                   {"subsets_evaluated", r.cheeger.n_evaluated},
                   {"item_a_violations", r.item_a_violations},
                   {"corrected_violations", r.corrected_violations},
                   {"literal_violations", r.literal_violations},
                   {"holds", r.holds()},
                   {"nodes", std::move(nodes)}};
    }

    const ojson doc = {{"graph", {{"id", src.id}, {"n", n}, {"m", g.edge_count()}}},
                       {"lambda2_bound", std::move(lambda)},
                       {"cheeger_bounds", std::move(cheeger)},
                       {"holds", all_hold}};
    Sink sink(f.common.output, out);
    *sink << doc.dump(2) << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

struct StatsFlags {
    Common common;
    std::vector<std::string> inputs;
    GenFlags gen;
    std::size_t bins = 50;
    std::string histograms;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
    file << content;
}

int cmd_stats(const StatsFlags& f, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(f.common.format);
    if (f.bins == 0) throw UsageError("--bins must be at least 1");
    std::vector<Source> sources;
    for (const auto& path : f.inputs) sources.push_back(load_source(path, {}, err));
    if (gen_requested(f.gen)) sources.push_back(load_source({}, f.gen, err));
    if (sources.empty()) throw UsageError("stats needs --input FILE (repeatable) or a generator spec");

    std::vector<NetworkReport> reports;
    for (const auto& s : sources) {
        if (s.graph.node_count() == 0) throw UsageError("graph '" + s.id + "' has no nodes");
        reports.push_back(network_report(s.graph, s.id, f.bins, f.common.threads));
    }
    if (!f.histograms.empty()) {
        fs::create_directories(f.histograms);
        for (const auto& r : reports) {
            write_file(fs::path(f.histograms) / (r.graph_id + "_xi.csv"), histogram_to_csv(r.ksi.histogram));
            write_file(fs::path(f.histograms) / (r.graph_id + "_xi_norm.csv"),
                       histogram_to_csv(r.ksi_normalized.histogram));
        }
        err << "ksi: histograms written to " << f.histograms << '\n';
    }
    Sink sink(f.common.output, out);
    if (format == Format::csv) {
        *sink << report_csv_header() << '\n';
        for (const auto& r : reports) *sink << report_to_csv_row(r) << '\n';
    } else if (reports.size() == 1) {
        *sink << report_to_json(reports.front()) << '\n';
    } else {
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(ojson::parse(report_to_json(r)));
        *sink << arr.dump(2) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// montecarlo

struct MonteCarloFlags {
    Common common;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
};

ojson estimate_json(const McEstimate& e) {
    return {{"mean", e.mean},
            {"std_error", json_number(e.std_error)},
            {"expected", e.expected},
            {"z", json_number(e.z)}};
}

int cmd_montecarlo(const MonteCarloFlags& f, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(f.common.format);
    const auto r = er_monte_carlo(f.n, f.p, f.samples, f.seed, f.common.threads);
    if (!r.verdict_available) err << "ksi: a single sample has no standard error; no verdict\n";
    Sink sink(f.common.output, out);
    if (format == Format::csv) {
        std::ostream& o = *sink;
        o << "quantity,mean,std_error,expected,z\n";
        const std::pair<const char*, const McEstimate*> rows[] = {
            {"e_boundary", &r.e_boundary}, {"Xi_hat", &r.Xi_hat}, {"Xi", &r.Xi}};
        for (const auto& [name, e] : rows) {
            o << name << ',' << fmt(e->mean) << ',' << fmt(e->std_error) << ',' << fmt(e->expected) << ','
              << fmt(e->z) << '\n';
        }
        o << "# summary: n=" << r.n << " p=" << fmt(r.p) << " samples=" << r.samples << " seed=" << r.seed
          << " Xi_hat_printed=" << fmt(r.Xi_hat_printed_expected) << " Xi_hat_printed_z=" << fmt(r.Xi_hat_printed_z)
          << " verdict="
          << (r.verdict_available ? (r.within_3se ? "within_3se" : "outside_3se") : "unavailable") << '\n';
    } else {
        const ojson doc = {
            {"n", r.n},
            {"p", r.p},
            {"samples", r.samples},
            {"seed", r.seed},
            {"e_boundary", estimate_json(r.e_boundary)},
            {"Xi_hat", estimate_json(r.Xi_hat)},
            {"Xi", estimate_json(r.Xi)},
            {"Xi_hat_printed", {{"expected", r.Xi_hat_printed_expected}, {"z", json_number(r.Xi_hat_printed_z)}}},
            {"verdict", r.verdict_available ? ojson(r.within_3se ? "within_3se" : "outside_3se") : ojson(nullptr)}};
        *sink << doc.dump(2) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceFlags {
    std::string id;
    double scale = 1.0;
    std::string output;
    std::uint64_t seed = 1;
    std::size_t seed_count = 5;
    std::size_t bins = 50;
    unsigned threads = 1;
};

class Bundle {
public:
    Bundle(const ReproduceFlags& f, fs::path dir) : flags_(f), dir_(std::move(dir)) {
        for (std::size_t s = 0; s < f.seed_count; ++s) seeds_.push_back(f.seed + s);
    }

    [[nodiscard]] std::size_t scaled(double n, std::size_t floor = 1) const {
        return std::max<std::size_t>(floor, static_cast<std::size_t>(std::llround(n * flags_.scale)));
    }
    [[nodiscard]] const std::vector<std::uint64_t>& seeds() const { return seeds_; }
    ojson& parameters() { return params_; }

    void write(const std::string& name, const std::string& content) {
        write_file(dir_ / name, content);
        files_.push_back(name);
    }

    void finish(std::ostream& err) {
        const ojson manifest = {{"experiment", flags_.id},
                                {"scale", flags_.scale},
                                {"base_seed", flags_.seed},
                                {"seeds", seeds_},
                                {"bins", flags_.bins},
                                {"parameters", params_},
                                {"files", files_}};
        write_file(dir_ / "manifest.json", manifest.dump(2) + "\n");
        err << "ksi: " << flags_.id << ": wrote " << files_.size() + 1 << " files to " << dir_.string() << '\n';
    }

private:
    const ReproduceFlags& flags_;
    fs::path dir_;
    std::vector<std::uint64_t> seeds_;
    ojson params_ = ojson::object();
    std::vector<std::string> files_;
};

void append_histogram(std::ostringstream& o, const std::string& prefix, const Histogram& h) {
    for (std::size_t b = 0; b < h.counts.size(); ++b) o << prefix << fmt(h.edges[b]) << ',' << h.counts[b] << '\n';
}

std::vector<double> p_grid_tenths() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    return grid;
}

void write_ratio_rows(std::ostringstream& o, std::size_t n, std::size_t k, const std::vector<RatioPoint>& pts) {
    for (const auto& pt : pts) {
        o << n << ',' << 2 * k << ',' << fmt(pt.p) << ',' << fmt(pt.xi_ratio) << ',' << fmt(pt.xi_hat_ratio) << ','
          << fmt(pt.Xi) << ',' << fmt(pt.Xi_hat) << '\n';
    }
}

constexpr const char* kRatioHeader = "n,two_k,p,xi_ratio,xi_hat_ratio,Xi,Xi_hat\n";

void reproduce_fig1(Bundle& b, const ReproduceFlags& f) {
    // Per-node ratios xi_i / xi_0 on rewired lattices against the unrewired value.
    const std::size_t k = b.scaled(50);
    std::ostringstream o;
    o << "n,two_k,p,seed,measure,bin_left,count\n";
    ojson runs = ojson::array();
    for (double n_full : {200.0, 500.0}) {
        const std::size_t n = std::max(b.scaled(n_full), 2 * k + 1);
        const auto lattice = analytic_centrality(
            FamilyParams::ring_lattice(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
        const double xi0 = lattice.classes.front().ksi.to_double();
        const double xi_hat0 = lattice.classes.front().ksi_normalized.to_double();
        for (double p : {0.2, 0.6}) {
            for (std::size_t s = 0; s < b.seeds().size(); ++s) {
                const Graph g = gen_watts_strogatz(n, k, p, b.seeds()[s]);
                auto t = centrality_table(g, f.threads);
                for (double& v : t.ksi.values) v /= xi0;
                for (double& v : t.ksi_normalized.values) v /= xi_hat0;
                const std::string prefix =
                    std::to_string(n) + ',' + std::to_string(2 * k) + ',' + fmt(p) + ',' + std::to_string(b.seeds()[s]);
                append_histogram(o, prefix + ",xi_ratio,", summarize(t.ksi, f.bins).histogram);
                append_histogram(o, prefix + ",xi_hat_ratio,", summarize(t.ksi_normalized, f.bins).histogram);
            }
            runs.push_back({{"family", "watts_strogatz"}, {"n", n}, {"k", k}, {"p", p}});
        }
    }
    b.parameters()["graphs"] = std::move(runs);
    b.write("fig1_ratio_histograms.csv", o.str());
}

void reproduce_fig2(Bundle& b, const ReproduceFlags& f) {
    const std::size_t n = b.scaled(500, 5);
    const auto grid = p_grid_tenths();
    std::ostringstream o;
    o << kRatioHeader;
    ojson ks = ojson::array();
    for (double frac : {0.1, 0.2, 0.5}) {
        const std::size_t k = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(frac * n / 2.0)), 1,
                                                       (n - 1) / 2);
        write_ratio_rows(o, n, k, ratio_series_ws(n, k, grid, b.seeds(), f.threads));
        ks.push_back(k);
    }
    b.parameters() = {{"family", "watts_strogatz"}, {"n", n}, {"k", ks}, {"p_grid", grid}};
    b.write("fig2_ratio_series.csv", o.str());
}

void reproduce_fig3(Bundle& b, const ReproduceFlags& f) {
    const auto grid = p_grid_tenths();
    std::ostringstream o;
    o << kRatioHeader;
    ojson runs = ojson::array();
    for (double n_full : {200.0, 500.0, 1000.0, 2000.0}) {
        const std::size_t n = b.scaled(n_full, 5);
        const std::size_t k =
            std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(0.1 * n)), 1, (n - 1) / 2);
        write_ratio_rows(o, n, k, ratio_series_ws(n, k, grid, b.seeds(), f.threads));
        runs.push_back({{"n", n}, {"k", k}});
    }
    b.parameters() = {{"family", "watts_strogatz"}, {"two_k_over_n", 0.2}, {"graphs", runs}, {"p_grid", grid}};
    b.write("fig3_ratio_series.csv", o.str());
}

void reproduce_fig4(Bundle& b, const ReproduceFlags& f) {
    std::ostringstream o;
    o << "n,m,seed,measure,bin_left,count\n";
    ojson runs = ojson::array();
    for (double n_full : {200.0, 500.0}) {
        const std::size_t n = b.scaled(n_full, 2);
        for (double frac : {0.25, 0.5, 0.75}) {
            const std::size_t m =
                std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(frac * n)), 1, n - 1);
            for (std::uint64_t seed : b.seeds()) {
                const Graph g = gen_barabasi_albert(n, m, seed);
                const auto t = centrality_table(g, f.threads);
                const std::string prefix = std::to_string(n) + ',' + std::to_string(m) + ',' + std::to_string(seed);
                append_histogram(o, prefix + ",xi,", summarize(t.ksi, f.bins).histogram);
                append_histogram(o, prefix + ",xi_norm,", summarize(t.ksi_normalized, f.bins).histogram);
            }
            runs.push_back({{"n", n}, {"m", m}});
        }
    }
    b.parameters() = {{"family", "barabasi_albert"}, {"graphs", runs}};
    b.write("fig4_histograms.csv", o.str());
}

void reproduce_fig5(Bundle& b, const ReproduceFlags& f) {
    std::vector<std::size_t> n_grid;
    for (double n_full : {200.0, 500.0, 750.0, 1000.0, 1500.0, 2000.0}) n_grid.push_back(b.scaled(n_full, 2));
    std::vector<double> ratios;
    for (int i = 0; i < 8; ++i) ratios.push_back((1.0 + 4.0 * i) / 30.0);
    const auto cells = ba_size_invariance(n_grid, ratios, b.seeds(), f.threads);
    std::ostringstream o;
    o << "k_over_n,n,m,Xi_hat,Xi\n";
    for (const auto& c : cells) {
        o << fmt(c.k_ratio) << ',' << c.n << ',' << c.m_attach << ',' << fmt(c.Xi_hat) << ',' << fmt(c.Xi) << '\n';
    }
    b.parameters() = {{"family", "barabasi_albert"}, {"n_grid", n_grid}, {"k_over_n", ratios}};
    b.write("fig5_size_invariance.csv", o.str());
}

void reproduce_fig10(Bundle& b, const ReproduceFlags& f) {
    const std::size_t m = b.scaled(50);
    const std::size_t n0 = std::max(b.scaled(500), 2 * m);
    const std::size_t n = std::max(b.scaled(4000), n0);
    std::ostringstream hist;
    hist << "seed,measure,bin_left,count\n";
    std::ostringstream rows;
    rows << "seed," << report_csv_header() << '\n';
    for (std::uint64_t seed : b.seeds()) {
        const Graph g = gen_bhl(n, n0, m, seed);
        const auto r = network_report(g, "BHL", f.bins, f.threads);
        append_histogram(hist, std::to_string(seed) + ",xi,", r.ksi.histogram);
        append_histogram(hist, std::to_string(seed) + ",xi_norm,", r.ksi_normalized.histogram);
        rows << seed << ',' << report_to_csv_row(r) << '\n';
    }
    b.parameters() = {{"family", "bhl"}, {"n", n}, {"n0", n0}, {"m", m}};
    b.write("fig10_histograms.csv", hist.str());
    b.write("fig10_summary.csv", rows.str());
}

void reproduce_table1(Bundle& b, const ReproduceFlags& f) {
    struct Row {
        std::string name;
        GenSpec spec;
        std::optional<double> paper_Xi_hat;
        std::optional<double> paper_Xi;
    };
    const std::size_t n = b.scaled(4000, 100);
    std::vector<Row> rows;
    {
        GenSpec s;
        s.family = GenFamily::barabasi_albert;
        s.n = n;
        s.m = std::min<std::size_t>(43, n - 1);
        rows.push_back({"Barabasi-Albert", s, 0.0355, 138.9953});
    }
    {
        GenSpec s;
        s.family = GenFamily::watts_strogatz;
        s.n = n;
        s.k = std::min<std::size_t>(21, (n - 1) / 2);
        s.p = 0.3;
        rows.push_back({"Watts-Strogatz", s, 0.0039, 15.6413});
        // Same row with 21 read as the total lattice degree (10 per side).
        s.k = std::min<std::size_t>(10, (n - 1) / 2);
        rows.push_back({"Watts-Strogatz(total degree 21)", s, 0.0039, 15.6413});
    }
    for (double p : {0.2, 0.001}) {
        GenSpec s;
        s.family = GenFamily::erdos_renyi;
        s.n = n;
        s.p = p;
        rows.push_back({"Erdos-Renyi(p=" + fmt(p) + ")", s, std::nullopt, std::nullopt});
    }

    std::ostringstream per_seed;
    per_seed << "seed," << report_csv_header() << '\n';
    std::ostringstream cmp;
    cmp << "network,n,Xi_hat,Xi,paper_Xi_hat,paper_Xi,rel_dev_Xi_hat,rel_dev_Xi,flag\n";
    ojson specs = ojson::array();
    for (auto& row : rows) {
        double xi_hat = 0.0;
        double xi = 0.0;
        for (std::uint64_t seed : b.seeds()) {
            row.spec.seed = seed;
            const auto r = network_report(generate(row.spec), row.name, f.bins, f.threads);
            per_seed << seed << ',' << report_to_csv_row(r) << '\n';
            xi_hat += r.Xi_hat;
            xi += r.Xi;
        }
        xi_hat /= static_cast<double>(b.seeds().size());
        xi /= static_cast<double>(b.seeds().size());
        cmp << row.name << ',' << n << ',' << fmt(xi_hat) << ',' << fmt(xi) << ',';
        if (row.paper_Xi_hat) {
            const double dh = std::abs(xi_hat - *row.paper_Xi_hat) / *row.paper_Xi_hat;
            const double dx = std::abs(xi - *row.paper_Xi) / *row.paper_Xi;
            cmp << fmt(*row.paper_Xi_hat) << ',' << fmt(*row.paper_Xi) << ',' << fmt(dh) << ',' << fmt(dx) << ','
                << (dh > 0.15 || dx > 0.15 ? "deviation_over_15pct" : "ok") << '\n';
        } else {
            cmp << ",,,,\n";
        }
        row.spec.seed = 0;
        specs.push_back({{"network", row.name}, {"spec", ojson::parse(genspec_to_json(row.spec))}});
    }
    b.parameters() = {{"networks", specs}, {"note", "spec seeds are replaced by each listed seed"}};
    b.write("table1_per_seed.csv", per_seed.str());
    b.write("table1_comparison.csv", cmp.str());
}

const std::map<std::string, std::function<void(Bundle&, const ReproduceFlags&)>>& recipes() {
    static const std::map<std::string, std::function<void(Bundle&, const ReproduceFlags&)>> table = {
        {"fig1", reproduce_fig1},   {"fig2", reproduce_fig2},   {"fig3", reproduce_fig3},
        {"fig4", reproduce_fig4},   {"fig5", reproduce_fig5},   {"fig10", reproduce_fig10},
        {"table1-artificial", reproduce_table1}};
    return table;
}

std::string joined_ids() {
    std::string s;
    for (const auto& id : reproduce_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
}

int cmd_reproduce(const ReproduceFlags& f, std::ostream&, std::ostream& err) {
    const auto it = recipes().find(f.id);
    if (it == recipes().end()) throw UsageError("unknown experiment '" + f.id + "'; valid ids: " + joined_ids());
    if (!(f.scale > 0.0 && f.scale <= 1.0)) throw UsageError("--scale must lie in (0, 1]");
    if (f.seed_count == 0) throw UsageError("--seeds must be at least 1");
    if (f.bins == 0) throw UsageError("--bins must be at least 1");
    const fs::path dir = f.output.empty() ? fs::path("reproduce-" + f.id) : fs::path(f.output);
    fs::create_directories(dir);
    Bundle bundle(f, dir);
    it->second(bundle, f);
    bundle.finish(err);
    return kExitOk;
}

}  // namespace

const std::vector<std::string>& reproduce_ids() {
    static const std::vector<std::string> ids = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig10", "table1-artificial"};
    return ids;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ksi-centrality analysis of undirected graphs", "ksi"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ksi 0.1.0");

    ComputeFlags compute;
    auto* c = app.add_subcommand("compute", "Per-node ksi, normalized ksi and clustering");
    add_common(c, compute.common);
    c->add_option("-i,--input", compute.input, "Edge-list file");
    add_gen_flags(c, compute.gen);
    c->add_option("--measures", compute.measures, "Comma-separated: xi, xi_norm, clustering")->capture_default_str();

    GenerateFlags generate_flags;
    auto* g = app.add_subcommand("generate", "Write a generated graph as an edge list");
    g->add_option("-o,--output", generate_flags.output, "Output file (default: standard output)");
    add_gen_flags(g, generate_flags.gen);

    AnalyticFlags analytic;
    auto* a = app.add_subcommand("analytic", "Exact values for special graph families");
    add_common(a, analytic.common);
    a->add_option("--family", analytic.family, "star, windmill, wheel, nested_triangles, ring_lattice")->required();
    a->add_option("-n,--n", analytic.n, "Family size parameter")->required();
    a->add_option("-k,--k", analytic.k, "Clique size (windmill) or neighbors per side (ring_lattice)");

    ExpectedFlags expected;
    auto* e = app.add_subcommand("expected", "Closed-form Erdos-Renyi expectations");
    add_common(e, expected.common);
    e->add_option("-n,--n", expected.n, "Number of nodes")->required();
    e->add_option("-p,--p", expected.p, "Edge probability");
    e->add_option("--lambda", expected.lambda, "Mean degree for the sparse regime p = lambda/n");

    VerifyFlags verify;
    verify.common.format = "json";
    auto* v = app.add_subcommand("verify", "Check the spectral and Cheeger bounds");
    add_common(v, verify.common);
    v->add_option("-i,--input", verify.input, "Edge-list file");
    add_gen_flags(v, verify.gen);
    v->add_option("--tolerance", verify.tolerance, "Slack tolerance for the spectral bound")->capture_default_str();
    v->add_option("--dense-limit", verify.dense_limit, "Largest n for the dense eigensolver")->capture_default_str();

    StatsFlags stats;
    auto* s = app.add_subcommand("stats", "Distribution summaries and shape labels");
    add_common(s, stats.common);
    s->add_option("-i,--input", stats.inputs, "Edge-list file (repeatable)");
    add_gen_flags(s, stats.gen);
    s->add_option("--bins", stats.bins, "Histogram bins")->capture_default_str();
    s->add_option("--histograms", stats.histograms, "Directory for per-network histogram CSVs");

    MonteCarloFlags mc;
    auto* m = app.add_subcommand("montecarlo", "Monte-Carlo check of the Erdos-Renyi expectations");
    add_common(m, mc.common);
    m->add_option("-n,--n", mc.n, "Number of nodes")->required();
    m->add_option("-p,--p", mc.p, "Edge probability")->required();
    m->add_option("--samples", mc.samples, "Ensemble size")->capture_default_str();
    m->add_option("--seed", mc.seed, "Ensemble seed")->capture_default_str();

    ReproduceFlags repro;
    auto* r = app.add_subcommand("reproduce", "Write figure and table data series");
    r->add_option("id", repro.id, "Experiment: " + joined_ids())->required();
    r->add_option("--scale", repro.scale, "Size factor in (0, 1] applied to node counts")->capture_default_str();
    r->add_option("-o,--output", repro.output, "Output directory (default: reproduce-<id>)");
    r->add_option("--seed", repro.seed, "Base seed; member s uses seed + s")->capture_default_str();
    r->add_option("--seeds", repro.seed_count, "Seeds per configuration")->capture_default_str();
    r->add_option("--bins", repro.bins, "Histogram bins")->capture_default_str();
    r->add_option("--threads", repro.threads, "Worker threads; results do not depend on it")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c) return cmd_compute(compute, out, err);
        if (*g) return cmd_generate(generate_flags, out, err);
        if (*a) return cmd_analytic(analytic, out, err);
        if (*e) return cmd_expected(expected, out, err);
        if (*v) return cmd_verify(verify, out, err);
        if (*s) return cmd_stats(stats, out, err);
        if (*m) return cmd_montecarlo(mc, out, err);
        if (*r) return cmd_reproduce(repro, out, err);
    } catch (const UsageError& ex) {
        err << "ksi: error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& ex) {
        err << "ksi: error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const ParameterError& ex) {
        err << "ksi: error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const UndefinedInputError& ex) {
        err << "ksi: error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& ex) {
        err << "ksi: error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "ksi: failure: " << ex.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace ksi::cli
