"""Conflict-free connection colorings: verification, exact computation, and
extremal edge-count tables.

An edge coloring makes a path conflict-free when some color appears exactly
once along it; a graph is conflict-free connected when every vertex pair
has such a path.  The package verifies colorings, computes the minimum
number of colors exactly with certificates, builds the sharp constructions,
and reproduces the extremal tables behind the closed-form thresholds by
exhaustive enumeration.
"""

from .census import (
    MAX_CENSUS_N,
    are_isomorphic,
    canonical_form,
    canonical_key,
    connected_graph_classes,
    generate_connected_graphs,
    graph_from_mask,
    mask_of,
    random_connected_graph,
    tree_classes,
)
from .coloring import (
    ConnectivityReport,
    EdgeColoring,
    bridge_block_coloring,
    coloring_from_map,
    colors_used,
    format_coloring,
    is_conflict_free_connected,
    is_conflict_free_path,
    parse_coloring,
    ruler_path_coloring,
    to_dot,
)
from .exact import (
    DEFAULT_BUDGET,
    CfcResult,
    SearchBudgetExceeded,
    SearchEvidence,
    cfc_exact,
    cfc_lower_bound,
)
from .extremal import (
    ExtremalTable,
    TableRow,
    bridge_extremal_graph,
    ceil_log2,
    clique_plus_pendants,
    compare_table_with_formulas,
    compute_extremal_table,
    f_threshold,
    g_threshold,
    max_edges_with_bridges,
    solved_census,
    star_clique_cfc,
    star_clique_graph,
    table_to_csv,
    table_to_json_dict,
)
from .graphs import (
    DEFAULT_PATH_CAP,
    BlockDecomposition,
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    Path,
    PathCapExceeded,
    block_decomposition,
    complete_graph,
    cycle_graph,
    enumerate_simple_paths,
    find_bridges,
    format_graph,
    is_connected,
    load_graph,
    parse_graph,
    path_graph,
    path_through_edge,
    require_connected,
    save_graph,
    star_graph,
)
from .verify import CheckResult, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "MAX_CENSUS_N",
    "are_isomorphic",
    "canonical_form",
    "canonical_key",
    "connected_graph_classes",
    "generate_connected_graphs",
    "graph_from_mask",
    "mask_of",
    "random_connected_graph",
    "tree_classes",
    "ConnectivityReport",
    "EdgeColoring",
    "bridge_block_coloring",
    "coloring_from_map",
    "colors_used",
    "format_coloring",
    "is_conflict_free_connected",
    "is_conflict_free_path",
    "parse_coloring",
    "ruler_path_coloring",
    "to_dot",
    "DEFAULT_BUDGET",
    "CfcResult",
    "SearchBudgetExceeded",
    "SearchEvidence",
    "cfc_exact",
    "cfc_lower_bound",
    "ExtremalTable",
    "TableRow",
    "bridge_extremal_graph",
    "ceil_log2",
    "clique_plus_pendants",
    "compare_table_with_formulas",
    "compute_extremal_table",
    "f_threshold",
    "g_threshold",
    "max_edges_with_bridges",
    "solved_census",
    "star_clique_cfc",
    "star_clique_graph",
    "table_to_csv",
    "table_to_json_dict",
    "DEFAULT_PATH_CAP",
    "BlockDecomposition",
    "DisconnectedGraphError",
    "Graph",
    "GraphFormatError",
    "Path",
    "PathCapExceeded",
    "block_decomposition",
    "complete_graph",
    "cycle_graph",
    "enumerate_simple_paths",
    "find_bridges",
    "format_graph",
    "is_connected",
    "load_graph",
    "parse_graph",
    "path_graph",
    "path_through_edge",
    "require_connected",
    "save_graph",
    "star_graph",
    "CheckResult",
    "run_all_checks",
    "__version__",
]
