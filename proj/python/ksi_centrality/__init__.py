"""Ksi-centrality measures, generators and bounds (C++ core)."""

from ._core import (
    Graph,
    algebraic_connectivity,
    analytic_centrality,
    average_clustering,
    average_ksi,
    average_ksi_normalized,
    boundary_edge_count,
    centrality_table,
    cheeger_exact,
    er_expected,
    generate,
    ksi,
    ksi_normalized,
    ksi_normalized_vector,
    ksi_vector,
    local_clustering,
    network_report,
    parse_edge_list,
    read_edge_list,
    run_cli,
    summarize,
)

__all__ = [
    "Graph",
    "algebraic_connectivity",
    "analytic_centrality",
    "average_clustering",
    "average_ksi",
    "average_ksi_normalized",
    "boundary_edge_count",
    "centrality_table",
    "cheeger_exact",
    "er_expected",
    "generate",
    "ksi",
    "ksi_normalized",
    "ksi_normalized_vector",
    "ksi_vector",
    "local_clustering",
    "network_report",
    "parse_edge_list",
    "read_edge_list",
    "run_cli",
    "summarize",
]
