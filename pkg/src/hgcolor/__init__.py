"""Incidence coloring of hypergraphs.

Core objects: Hypergraph, Incidence, the Levi (membership) graph, and
the conflict graph on incidences (the square of the line graph of the
Levi graph).  Proper vertex colorings of the conflict graph are exactly
proper incidence colorings, and correspond one-to-one to strong edge
colorings of the Levi graph.
"""

from .acyclicity import (
    GyoStep,
    GyoTrace,
    gyo_reduce,
    is_alpha_acyclic,
    is_alpha_acyclic_brute,
    linear_forest_test,
)
from .bounds import (
    BoundRow,
    BoundTable,
    SparsityReport,
    ZetaAudit,
    ZetaEdgeAudit,
    bound_table,
    eval_f,
    eval_w,
    eval_z,
    poly_bound,
    poly_bound_collapsed,
    sparsity_empirical,
    zeta_sum_audit,
)
from .coloring import (
    ExactResult,
    IncidenceColoring,
    StrongEdgeColoring,
    clique_lower_bound,
    exact_chromatic,
    greedy_color,
    translate,
    translate_back,
    verify_incidence,
    verify_strong_edge,
)
from .completion import (
    CompletionCheck,
    Embedding,
    check_completion,
    complete,
    pad_uniform,
    regularize_step,
)
from .errors import ParseError, ResourceCapError
from .generators import (
    gen_acyclic_linear,
    gen_biregular_k2t1_free,
    gen_linear,
    gen_quasi_linear,
    gen_uniform_acyclic_linear,
    prufer_decode,
    random_tree_edges,
)
from .hypergraph import Hypergraph, Incidence, StructureReport
from .io import (
    parse_bipartite,
    parse_coloring,
    parse_hypergraph,
    serialize_bipartite,
    serialize_coloring,
    serialize_hypergraph,
)
from .levi import (
    BipartiteGraph,
    ConflictGraph,
    SimpleGraph,
    biregular_profile,
    conflict_graph,
    d2_neighborhood,
    is_k2t1_free,
    levi_graph,
    line_graph_square,
    zeta,
)
from .tree_color import (
    RootedTree,
    color_acyclic_linear,
    greedy_tree_strong,
    nest_permute,
    nest_permute_with_stats,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BoundRow",
    "BoundTable",
    "CompletionCheck",
    "ConflictGraph",
    "Embedding",
    "ExactResult",
    "GyoStep",
    "GyoTrace",
    "Hypergraph",
    "Incidence",
    "IncidenceColoring",
    "ParseError",
    "ResourceCapError",
    "RootedTree",
    "SimpleGraph",
    "SparsityReport",
    "StrongEdgeColoring",
    "StructureReport",
    "ZetaAudit",
    "ZetaEdgeAudit",
    "biregular_profile",
    "bound_table",
    "check_completion",
    "clique_lower_bound",
    "color_acyclic_linear",
    "complete",
    "conflict_graph",
    "d2_neighborhood",
    "eval_f",
    "eval_w",
    "eval_z",
    "exact_chromatic",
    "gen_acyclic_linear",
    "gen_biregular_k2t1_free",
    "gen_linear",
    "gen_quasi_linear",
    "gen_uniform_acyclic_linear",
    "greedy_color",
    "greedy_tree_strong",
    "gyo_reduce",
    "is_alpha_acyclic",
    "is_alpha_acyclic_brute",
    "is_k2t1_free",
    "levi_graph",
    "line_graph_square",
    "linear_forest_test",
    "nest_permute",
    "nest_permute_with_stats",
    "pad_uniform",
    "parse_bipartite",
    "parse_coloring",
    "parse_hypergraph",
    "poly_bound",
    "poly_bound_collapsed",
    "prufer_decode",
    "random_tree_edges",
    "regularize_step",
    "serialize_bipartite",
    "serialize_coloring",
    "serialize_hypergraph",
    "sparsity_empirical",
    "translate",
    "translate_back",
    "verify_incidence",
    "verify_strong_edge",
    "zeta",
    "zeta_sum_audit",
]
