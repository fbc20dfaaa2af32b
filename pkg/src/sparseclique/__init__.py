"""sparseclique: maximum-clique algorithms and tooling for large sparse graphs."""

from .baseline import BRUTE_FORCE_MAX_N, brute_force, max_clique_cp
from .community import (
    InteractionRecords,
    WeightedGraph,
    build_cooccurrence_graph,
    detect_communities,
    threshold_filter,
)
from .errors import FormatError, UnsupportedFormatError
from .exact import (
    CliqueResult,
    Ordering,
    PruneStats,
    SolverConfig,
    max_clique,
    verify_clique,
)
from .graph import EdgeList, Graph, degree, max_degree, normalize
from .heuristic import (
    ProbeRow,
    SelectionPolicy,
    heuristic_scaling_probe,
    largest_clique_per_vertex,
    max_clique_heuristic,
    per_vertex_lines,
)
from .io import (
    detect_format,
    load_graph,
    parse_dimacs,
    parse_edge_list,
    parse_matrix_market,
    save_graph,
    write_dimacs,
    write_edge_list,
    write_matrix_market,
)
from .rmat import RmatParams, family_params, family_presets, generate_rmat

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_MAX_N",
    "CliqueResult",
    "EdgeList",
    "FormatError",
    "Graph",
    "InteractionRecords",
    "Ordering",
    "ProbeRow",
    "PruneStats",
    "RmatParams",
    "SelectionPolicy",
    "SolverConfig",
    "UnsupportedFormatError",
    "WeightedGraph",
    "brute_force",
    "build_cooccurrence_graph",
    "degree",
    "detect_communities",
    "detect_format",
    "family_params",
    "family_presets",
    "generate_rmat",
    "heuristic_scaling_probe",
    "largest_clique_per_vertex",
    "load_graph",
    "max_clique",
    "max_clique_cp",
    "max_clique_heuristic",
    "max_degree",
    "normalize",
    "parse_dimacs",
    "parse_edge_list",
    "parse_matrix_market",
    "per_vertex_lines",
    "save_graph",
    "threshold_filter",
    "verify_clique",
    "write_dimacs",
    "write_edge_list",
    "write_matrix_market",
]
