"""Rainbow vertex-connection toolbox.

Computing, constructing and verifying rainbow vertex-connection colorings
of small graphs: exact search, closed cycle values, constructive colorers
for forbidden-subgraph families, and the supporting graph machinery
(graph6 I/O, induced-subgraph detection, dominating structures,
exhaustive catalogs).
"""

from .graph import (
    DisconnectedGraphError,
    Graph,
    Graph6Error,
    bfs_distances,
    diameter_and_path,
    induced_subgraph,
    is_connected,
    parse_graph6,
    serialize_graph6,
)
from .families import FamilySpec, family_expectations, generate
from .detect import PairClass, classify_pair, find_induced, is_family_free, is_isomorphic
from .rvc import (
    ColoringMismatchError,
    RvcResult,
    SearchBudgetError,
    VerificationReport,
    VertexColoring,
    cycle_rvc,
    halved_cycle_coloring,
    is_rainbow_vertex_connected,
    rvc_exact,
    vertex_rainbow_path,
)
from .structure import (
    DiameterPartition,
    DominatingStructure,
    Lemma1Report,
    check_lemma1,
    classify_against_path,
    find_dominating_clique_or_p3,
)
from .colorers import (
    ConstructiveColoring,
    EscapeCycle,
    FamilyPreconditionError,
    build_escape_cycle,
    color_p4_free,
    color_p5_kth_free,
    color_s122_n_free,
)

__version__ = "0.1.0"

__all__ = [
    "ColoringMismatchError",
    "ConstructiveColoring",
    "DiameterPartition",
    "DisconnectedGraphError",
    "DominatingStructure",
    "EscapeCycle",
    "FamilyPreconditionError",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "Lemma1Report",
    "PairClass",
    "RvcResult",
    "SearchBudgetError",
    "VerificationReport",
    "VertexColoring",
    "bfs_distances",
    "build_escape_cycle",
    "check_lemma1",
    "classify_against_path",
    "classify_pair",
    "color_p4_free",
    "color_p5_kth_free",
    "color_s122_n_free",
    "cycle_rvc",
    "diameter_and_path",
    "family_expectations",
    "find_dominating_clique_or_p3",
    "find_induced",
    "generate",
    "halved_cycle_coloring",
    "induced_subgraph",
    "is_connected",
    "is_family_free",
    "is_isomorphic",
    "is_rainbow_vertex_connected",
    "parse_graph6",
    "rvc_exact",
    "serialize_graph6",
    "vertex_rainbow_path",
]
