"""Exact odd coloring, planarity and thickness tools for small graphs."""

from .budget import Budget
from .canonical import all_graphs, canonical_form, canonical_key, connected_graphs
from .coloring import OddVerdict, VertexColoring, is_odd_coloring, odd_colors, odd_verdict, star_color
from .critical import (
    CriticalityReport,
    MinorCriticalityReport,
    check_structural_lemmas,
    is_odd_k_critical,
    is_odd_k_minor_critical,
    search_critical,
)
from .discharging import DischargeReport, surplus_analysis, surplus_from_count, verify_certificate
from .errors import (
    BudgetExhausted,
    DomainError,
    InvariantError,
    LemmaTraceError,
    OddThickError,
    ParameterError,
    ParseError,
    PreconditionError,
    SizeCapError,
)
from .extension import extend_after_edge_pair_deletion, extend_after_vertex_deletion, n_easy_recolor
from .formats import from_dimacs, from_edge_list, from_graph6, to_dimacs, to_edge_list, to_graph6
from .graph import ACYCLIC, DegreeStats, Graph, degree_stats, girth
from .planarity import PlaneEmbedding, PlanarityResult, is_planar, planar_embed
from .solvers import SolveResult, chromatic_number, has_odd_coloring, odd_chromatic_number
from .thickness import EdgePartition, ThicknessResult, is_biplanar, thickness, thickness_lower_bound

__all__ = [
    "ACYCLIC",
    "Budget",
    "BudgetExhausted",
    "CriticalityReport",
    "DegreeStats",
    "DischargeReport",
    "DomainError",
    "EdgePartition",
    "Graph",
    "InvariantError",
    "LemmaTraceError",
    "MinorCriticalityReport",
    "OddThickError",
    "OddVerdict",
    "ParameterError",
    "ParseError",
    "PlanarityResult",
    "PlaneEmbedding",
    "PreconditionError",
    "SizeCapError",
    "SolveResult",
    "ThicknessResult",
    "VertexColoring",
    "all_graphs",
    "canonical_form",
    "canonical_key",
    "check_structural_lemmas",
    "chromatic_number",
    "connected_graphs",
    "degree_stats",
    "extend_after_edge_pair_deletion",
    "extend_after_vertex_deletion",
    "from_dimacs",
    "from_edge_list",
    "from_graph6",
    "girth",
    "has_odd_coloring",
    "is_biplanar",
    "is_odd_coloring",
    "is_odd_k_critical",
    "is_odd_k_minor_critical",
    "is_planar",
    "n_easy_recolor",
    "odd_chromatic_number",
    "odd_colors",
    "odd_verdict",
    "planar_embed",
    "search_critical",
    "star_color",
    "surplus_analysis",
    "surplus_from_count",
    "thickness",
    "thickness_lower_bound",
    "to_dimacs",
    "to_edge_list",
    "to_graph6",
    "verify_certificate",
]
__version__ = "0.1.0"
