#include "cli.hpp"
#include "ksi/analytic.hpp"
#include "ksi/centrality.hpp"
#include "ksi/generators.hpp"
#include "ksi/spectral.hpp"
#include "ksi/stats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ksi;

namespace {

Graph graph_from_pairs(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

py::list edge_pairs(const Graph& g) {
    py::list out;
    for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
    return out;
}

py::dict rational_dict(const Rational& r) {
    py::dict d;
    d["exact"] = r.to_string();
    d["value"] = r.to_double();
    return d;
}

py::dict parsed_dict(const ParsedGraph& p) {
    py::dict d;
    d["graph"] = p.graph;
    d["labels"] = p.labels;
    d["self_loops_dropped"] = p.stats.self_loops_dropped;
    d["duplicates_dropped"] = p.stats.duplicates_dropped;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ksi-centrality core";

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", [](const Graph& g, NodeId i) { g.check_node(i); return g.degree(i); })
        .def("degrees", &Graph::degrees)
        .def("neighbors", [](const Graph& g, NodeId i) {
            g.check_node(i);
            const auto nb = g.neighbors(i);
            return std::vector<NodeId>(nb.begin(), nb.end());
        })
        .def("has_edge", &Graph::has_edge)
        .def("edges", &edge_pairs)
        .def("to_edge_list", [](const Graph& g) { return serialize_edge_list(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", [](const std::string& text) { return parsed_dict(parse_edge_list(text)); },
          py::arg("text"));
    m.def("read_edge_list", [](const std::string& path) { return parsed_dict(read_edge_list_file(path)); },
          py::arg("path"));

    m.def("boundary_edge_count", &boundary_edge_count, py::arg("g"), py::arg("i"));
    m.def("ksi", &ksi::ksi, py::arg("g"), py::arg("i"));
    m.def("ksi_normalized", &ksi_normalized, py::arg("g"), py::arg("i"));
    m.def("local_clustering", &local_clustering, py::arg("g"), py::arg("i"));
    m.def("ksi_vector", [](const Graph& g, unsigned t) { return ksi_vector(g, t).values; }, py::arg("g"),
          py::arg("threads") = 1);
    m.def("ksi_normalized_vector", [](const Graph& g, unsigned t) { return ksi_normalized_vector(g, t).values; },
          py::arg("g"), py::arg("threads") = 1);
    m.def("average_ksi", &average_ksi, py::arg("g"), py::arg("threads") = 1);
    m.def("average_ksi_normalized", &average_ksi_normalized, py::arg("g"), py::arg("threads") = 1);
    m.def("average_clustering", &average_clustering, py::arg("g"), py::arg("threads") = 1);
    m.def(
        "centrality_table",
        [](const Graph& g, unsigned threads) {
            const auto t = centrality_table(g, threads);
            py::dict d;
            d["boundary"] = t.counts.boundary;
            d["inner_edges"] = t.counts.inner_edges;
            d["ksi"] = t.ksi.values;
            d["ksi_normalized"] = t.ksi_normalized.values;
            d["clustering"] = t.clustering.values;
            return d;
        },
        py::arg("g"), py::arg("threads") = 1);

    m.def(
        "algebraic_connectivity",
        [](const Graph& g) { return algebraic_connectivity(g).lambda2; }, py::arg("g"));
    m.def(
        "cheeger_exact",
        [](const Graph& g) {
            const auto r = cheeger_exact(g);
            py::dict d = rational_dict(r.h);
            d["witness"] = r.witness;
            return d;
        },
        py::arg("g"));

    m.def(
        "generate",
        [](const std::string& spec_json) { return generate(genspec_from_json(spec_json)); }, py::arg("spec_json"),
        "Build a graph from a GenSpec JSON document, e.g. "
        "'{\"family\": \"ws\", \"params\": {\"n\": 100, \"k\": 3, \"p\": 0.1}, \"seed\": 1}'.");

    m.def(
        "analytic_centrality",
        [](const std::string& family, std::int64_t n, std::int64_t k) {
            const auto a = analytic_centrality(FamilyParams{family_from_string(family), n, k});
            py::dict d;
            d["node_count"] = a.node_count;
            d["Xi"] = rational_dict(a.Xi);
            d["Xi_hat"] = rational_dict(a.Xi_hat);
            py::list classes;
            for (const auto& c : a.classes) {
                py::dict cd;
                cd["name"] = c.name;
                cd["count"] = c.count;
                cd["degree"] = c.degree;
                cd["boundary"] = c.boundary;
                cd["ksi"] = rational_dict(c.ksi);
                cd["ksi_normalized"] = rational_dict(c.ksi_normalized);
                classes.append(cd);
            }
            d["classes"] = classes;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("k") = 0);

    m.def(
        "er_expected",
        [](std::size_t n, double p) {
            const auto e = er_expected(n, p);
            py::dict d;
            d["e_boundary"] = e.e_boundary;
            d["Xi_hat"] = e.Xi_hat;
            d["Xi_hat_printed"] = e.xi_hat_printed;
            d["Xi"] = e.Xi;
            return d;
        },
        py::arg("n"), py::arg("p"));

    m.def(
        "summarize",
        [](const std::vector<double>& values, std::size_t bins) {
            const auto s = summarize(values, bins);
            py::dict d;
            d["count"] = s.count;
            d["mean"] = s.mean;
            d["variance"] = s.variance;
            d["skewness"] = s.skewness;
            d["min"] = s.min;
            d["max"] = s.max;
            d["counts"] = s.histogram.counts;
            d["edges"] = s.histogram.edges;
            d["shape"] = s.count >= 3 ? py::object(py::str(std::string(to_string(shape_classify(s))))) : py::none();
            return d;
        },
        py::arg("values"), py::arg("bins") = 50);
    m.def(
        "network_report",
        [](const Graph& g, const std::string& id, std::size_t bins) {
            return report_to_json(network_report(g, id, bins));
        },
        py::arg("g"), py::arg("graph_id"), py::arg("bins") = 50, "JSON text of the per-network report.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the ksi command line in-process; returns (exit_code, stdout, stderr).");
}
