"""Self-similar graph families, their maximum induced forests, and an
exact feedback vertex set solver with verification tooling."""

from .addressing import (
    APEX_LABEL,
    EMPTY_WORD_LABEL,
    FAMILIES,
    Contracted,
    Hat,
    ParseError,
    Prefixed,
    format_vertex,
    format_word,
    parse_vertex,
    parse_word,
)
from .exact_fvs import (
    BUDGET_ENV_VAR,
    DEFAULT_BUDGET,
    FvsCertificate,
    resolve_budget,
    tau_bnb,
    tau_bruteforce,
    verify_certificate,
)
from .generators import (
    expected_order,
    expected_size,
    nonclique_edges,
    sierpinski,
    sierpinski_plus,
    sierpinski_plusplus,
    triangle,
    triangle_explicit,
)
from .graph_core import (
    GraphError,
    LabeledGraph,
    Multigraph,
    build_graph,
    contract_edges,
    export_dot,
    export_edgelist,
    find_cycle,
    import_edgelist,
    is_forest,
    relabel,
)
from .pairable_forest import (
    NotPairableError,
    PairablePartition,
    closure,
    closure_block,
    closure_split,
    forest_plus,
    forest_plusplus,
    forest_sierpinski,
    fvs_sierpinski,
    pairable_partition,
)
from .triangle_forest import (
    GapReport,
    StructureReport,
    conjecture_gap,
    corner_path_base,
    forest_order_bound,
    forest_order_recurrence,
    forest_order_small,
    forest_triangle,
    fvs_triangle3,
    structure_report,
    tail_path_base,
)
from .verify_cli import (
    SUITES,
    VerificationError,
    VerificationReport,
    render_json,
    render_table,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "APEX_LABEL",
    "BUDGET_ENV_VAR",
    "Contracted",
    "DEFAULT_BUDGET",
    "EMPTY_WORD_LABEL",
    "FAMILIES",
    "FvsCertificate",
    "GapReport",
    "GraphError",
    "Hat",
    "LabeledGraph",
    "Multigraph",
    "NotPairableError",
    "PairablePartition",
    "ParseError",
    "Prefixed",
    "StructureReport",
    "SUITES",
    "VerificationError",
    "VerificationReport",
    "build_graph",
    "closure",
    "closure_block",
    "closure_split",
    "conjecture_gap",
    "contract_edges",
    "corner_path_base",
    "expected_order",
    "expected_size",
    "export_dot",
    "export_edgelist",
    "find_cycle",
    "forest_order_bound",
    "forest_order_recurrence",
    "forest_order_small",
    "forest_plus",
    "forest_plusplus",
    "forest_sierpinski",
    "forest_triangle",
    "format_vertex",
    "format_word",
    "fvs_sierpinski",
    "fvs_triangle3",
    "import_edgelist",
    "is_forest",
    "nonclique_edges",
    "parse_vertex",
    "parse_word",
    "pairable_partition",
    "relabel",
    "render_json",
    "render_table",
    "resolve_budget",
    "run_suite",
    "sierpinski",
    "sierpinski_plus",
    "sierpinski_plusplus",
    "structure_report",
    "tau_bnb",
    "tau_bruteforce",
    "triangle",
    "triangle_explicit",
    "verify_certificate",
    "__version__",
]
