"""Exact cycle packing/covering duality, widths, and pursuit games.

The package computes two-sided certificates for cycle packing and
covering questions on undirected, directed, and signed (bidirected)
graphs, entirely in exact rational arithmetic: a family of disjoint
cycles on one side, a hitting set on the other, and the checked
inequality between their values.  On top of that sit cut porosity,
cycle width, and a cops-and-robbers game whose cop strategy is built
from the duality certificates.
"""

from .engines import (
    bidirected_vertex_duality,
    build_edge_lp,
    build_split_vertex_lp,
    directed_edge_duality,
    directed_vertex_duality,
    peel_cycles,
    undirected_edge_duality,
)
from .errors import (
    BudgetExceededError,
    CycleDualityError,
    GraphFormatError,
    IntegralityError,
)
from .gf2 import GF2Matrix, gf2_bases, gf2_rank, gf2_solve
from .graphs import (
    BidirectedGraph,
    DirectedGraph,
    Edge,
    EdgeCut,
    Graph,
    SignedCycle,
    UndirectedGraph,
    directed_to_bidirected,
    edge_cut,
    graph_to_obj,
    incidence_matrix,
    parse_graph,
    serialize_graph,
    subdivide_edges,
    vertex_split,
)
from .lp import LinearProgram, LPSolution, solve, solve_dual_basic
from .oracles import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    FixtureReport,
    SearchReport,
    check_counterexample_properties,
    enumerate_cycles,
    is_disjoint_cycle_union,
    max_packing,
    min_hitting,
    search_nullspace_noncycle_fixture,
    search_vertex_question_counterexample,
    verify_hitting,
)
from .regularity import RationalMatrix, det, is_k_regular, is_totally_unimodular
from .reports import (
    DualityReport,
    HittingCertificate,
    PackingCertificate,
    report_to_json,
    report_to_obj,
)
from .widths import (
    CopStrategy,
    CycleDecomposition,
    GameResult,
    GameState,
    PorosityResult,
    cycle_porosity,
    cycle_width_bruteforce,
    decomposition_width,
    enumerate_cubic_trees,
    hitting_sets_Ye,
    induced_cut,
    is_circular,
    parse_decomposition,
    play_cops_and_robbers,
    serialize_decomposition,
    strong_components,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BidirectedGraph",
    "BudgetExceededError",
    "CopStrategy",
    "CycleDecomposition",
    "CycleDualityError",
    "DEFAULT_BUDGET",
    "DirectedGraph",
    "DualityReport",
    "Edge",
    "EdgeCut",
    "EnumerationBudget",
    "FixtureReport",
    "GF2Matrix",
    "GameResult",
    "GameState",
    "Graph",
    "GraphFormatError",
    "HittingCertificate",
    "IntegralityError",
    "LPSolution",
    "LinearProgram",
    "PackingCertificate",
    "PorosityResult",
    "RationalMatrix",
    "det",
    "SearchReport",
    "SignedCycle",
    "UndirectedGraph",
    "bidirected_vertex_duality",
    "build_edge_lp",
    "build_split_vertex_lp",
    "check_counterexample_properties",
    "cycle_porosity",
    "cycle_width_bruteforce",
    "decomposition_width",
    "directed_edge_duality",
    "directed_to_bidirected",
    "directed_vertex_duality",
    "edge_cut",
    "enumerate_cubic_trees",
    "enumerate_cycles",
    "gf2_bases",
    "gf2_rank",
    "gf2_solve",
    "graph_to_obj",
    "hitting_sets_Ye",
    "incidence_matrix",
    "induced_cut",
    "is_circular",
    "is_disjoint_cycle_union",
    "is_k_regular",
    "is_totally_unimodular",
    "max_packing",
    "min_hitting",
    "parse_decomposition",
    "parse_graph",
    "peel_cycles",
    "play_cops_and_robbers",
    "report_to_json",
    "report_to_obj",
    "search_nullspace_noncycle_fixture",
    "search_vertex_question_counterexample",
    "serialize_decomposition",
    "serialize_graph",
    "solve",
    "solve_dual_basic",
    "subdivide_edges",
    "undirected_edge_duality",
    "verify_hitting",
    "vertex_split",
]
