"""Graphs, pair statistics, spectra, feasibility bounds, and the finite-geometry constructions."""

from asrg_graphs.bounds import (
    absolute_classical,
    absolute_variant,
    absolute_variant_from_spectrum,
    exponent_bounds,
    family_scan,
    krein_classical,
    krein_variant,
    sigma_floor_absolute,
    sigma_floor_krein,
)
from asrg_graphs.cap_graphs import cap_graph, cap_graph_audit
from asrg_graphs.clique import clique_number, clique_report, max_clique
from asrg_graphs.graph import Graph, common_neighborhood, complement, graph_build
from asrg_graphs.io import format_graph, parse_graph, read_family, read_graph, write_graph
from asrg_graphs.logspace import LogReal
from asrg_graphs.orthogonality import (
    no_clique_formula,
    no_formula_params,
    no_graph,
    no_graph_only,
    tower_step_check,
)
from asrg_graphs.spectral import (
    approx_eigenvalue,
    e_matrix_report,
    eigh,
    form_classify,
    spectrum_report,
    srg_spectrum,
)
from asrg_graphs.stats import (
    asrg_stats,
    complement_parameters,
    mixing_window,
    regularity_classify,
)
from asrg_graphs.tower import greedy_clique_chain, neighborhood_tower

__all__ = [
    "Graph",
    "LogReal",
    "absolute_classical",
    "absolute_variant",
    "absolute_variant_from_spectrum",
    "approx_eigenvalue",
    "asrg_stats",
    "cap_graph",
    "cap_graph_audit",
    "clique_number",
    "clique_report",
    "common_neighborhood",
    "complement",
    "complement_parameters",
    "e_matrix_report",
    "eigh",
    "exponent_bounds",
    "family_scan",
    "form_classify",
    "format_graph",
    "graph_build",
    "greedy_clique_chain",
    "krein_classical",
    "krein_variant",
    "max_clique",
    "mixing_window",
    "neighborhood_tower",
    "no_clique_formula",
    "no_formula_params",
    "no_graph",
    "no_graph_only",
    "parse_graph",
    "read_family",
    "read_graph",
    "regularity_classify",
    "sigma_floor_absolute",
    "sigma_floor_krein",
    "spectrum_report",
    "srg_spectrum",
    "tower_step_check",
    "write_graph",
]
