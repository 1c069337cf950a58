"""Exact chromatic polynomials of digraphs.

Counts Neumann-Lara acyclic colorings: vertex colorings in which no
color class induces a directed cycle. The counting polynomial chi(D, x)
is computed exactly (arbitrary-precision integer coefficients) by three
independent formulas that are cross-validated against brute-force
oracles, with the hot subset-scan running in a compiled kernel when the
extension is available.
"""

from ._accel import KERNEL_BACKEND, available_backends
from .coflow import (
    METHOD_IDS,
    chromatic_polynomial,
    coflow_poly_edge_subsets,
    coflow_poly_mobius,
    coflow_poly_totally_cyclic,
    coflow_polynomial,
    contraction_rank,
    tc_membership,
)
from .digraph import (
    ArcSubset,
    Digraph,
    Edge,
    EdgeSubset,
    UnderlyingGraph,
    bridges,
    is_acyclic,
    is_totally_cyclic,
    max_partial_orientation,
    spanning_components,
    underlying_graph,
    weak_components,
)
from .oracles import (
    BudgetExceededError,
    chromatic_poly_deletion_contraction,
    chromatic_poly_undirected,
    count_acyclic_colorings,
    count_nl_coflows_mod_k,
)
from .polynomial import IntPolynomial
from .posets import (
    CycleUnionPoset,
    cycle_space_rank,
    enumerate_directed_cycles,
    enumerate_totally_cyclic_subsets,
    mobius_from_bottom,
)

__version__ = "0.1.0"

__all__ = [
    "ArcSubset",
    "BudgetExceededError",
    "CycleUnionPoset",
    "Digraph",
    "Edge",
    "EdgeSubset",
    "IntPolynomial",
    "KERNEL_BACKEND",
    "METHOD_IDS",
    "UnderlyingGraph",
    "available_backends",
    "bridges",
    "chromatic_poly_deletion_contraction",
    "chromatic_poly_undirected",
    "chromatic_polynomial",
    "coflow_poly_edge_subsets",
    "coflow_poly_mobius",
    "coflow_poly_totally_cyclic",
    "coflow_polynomial",
    "contraction_rank",
    "count_acyclic_colorings",
    "count_nl_coflows_mod_k",
    "cycle_space_rank",
    "enumerate_directed_cycles",
    "enumerate_totally_cyclic_subsets",
    "is_acyclic",
    "is_totally_cyclic",
    "max_partial_orientation",
    "mobius_from_bottom",
    "spanning_components",
    "tc_membership",
    "underlying_graph",
    "weak_components",
]
