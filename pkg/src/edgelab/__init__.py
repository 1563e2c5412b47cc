"""Maximum edge counts of graphs under two restricted parameters among the
independence number, the maximum degree and the matching number, with exact
solvers, extremal constructions and exhaustive certification on small graphs."""

from __future__ import annotations

from ._kernels import BACKEND
from .canon import (
    CanonicalForm,
    automorphism_generators,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
)
from .certify import CellSpec, TheoremId, VerificationReport, build_grid, certify, run_cell
from .enumeration import ExtremalResult, GraphFilter, all_graphs, extremal_search, graphs_up_to
from .errors import CapacityError, DomainError, EdgelabError, ParseError
from .exact import (
    ColoringCertificate,
    chromatic_index,
    chromatic_number,
    clique_number,
    independence_number,
    line_graph,
    max_independent_set,
)
from .extremal import (
    BoundCase,
    ExtremalCount,
    Regime,
    build_F,
    build_G,
    build_H,
    build_J,
    build_merged_component,
    build_second_extremal,
    canonical_witness,
    e1,
    e2,
    e3,
    eq9_upper,
    erdos_gallai_bound,
    j_edge_count,
)
from .gallai_edmonds import (
    GallaiEdmonds,
    essential_vertices,
    gallai_edmonds,
    verify_stability,
    verify_structure_theorem,
)
from .graph import Graph, VertexSet, disjoint_union, g6_decode, g6_encode, read_graph6_lines
from .matching import (
    Matching,
    has_perfect_matching,
    is_factor_critical,
    matching_number,
    max_matching,
    max_matching_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundCase",
    "CanonicalForm",
    "CapacityError",
    "CellSpec",
    "ColoringCertificate",
    "DomainError",
    "EdgelabError",
    "ExtremalCount",
    "ExtremalResult",
    "GallaiEdmonds",
    "Graph",
    "GraphFilter",
    "Matching",
    "ParseError",
    "Regime",
    "TheoremId",
    "VerificationReport",
    "VertexSet",
    "all_graphs",
    "automorphism_generators",
    "build_F",
    "build_G",
    "build_H",
    "build_J",
    "build_grid",
    "build_merged_component",
    "build_second_extremal",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "canonical_witness",
    "certify",
    "chromatic_index",
    "chromatic_number",
    "clique_number",
    "disjoint_union",
    "e1",
    "e2",
    "e3",
    "eq9_upper",
    "erdos_gallai_bound",
    "essential_vertices",
    "extremal_search",
    "g6_decode",
    "g6_encode",
    "gallai_edmonds",
    "graphs_up_to",
    "has_perfect_matching",
    "independence_number",
    "is_factor_critical",
    "is_isomorphic",
    "j_edge_count",
    "line_graph",
    "matching_number",
    "max_independent_set",
    "max_matching",
    "max_matching_bruteforce",
    "read_graph6_lines",
    "run_cell",
    "verify_stability",
    "verify_structure_theorem",
]
