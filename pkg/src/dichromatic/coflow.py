"""The coflow polynomial of a digraph, three ways, and chi.

The coflow polynomial psi of a digraph counts, at every group order k,
the coflows whose support contains a feedback arc set; multiplying by
x^(number of weak components) turns it into the chromatic polynomial
chi(D, x), whose value at k is the number of acyclic colorings with k
colors (colorings in which no color class induces a directed cycle).

Three independent formulas are implemented:

``mobius``
    Mobius inversion over the poset of cycle unions: the Mobius values
    come from the recursive definition, nothing else.
``tcs``
    Signed sum over all totally cyclic arc subsets, with the sign taken
    from the cycle-space rank of the subset.
``tc``
    Signed sum over underlying edge subsets whose maximal partial
    orientation is totally cyclic and which pass a digon/bridge test.
    This is the fast method: the per-subset work is local, so the scan
    runs in the selected kernel backend.

All three must agree coefficient for coefficient; the test suite
enforces this on thousands of digraphs.
"""

from __future__ import annotations

import time

from . import _kernels_py
from ._accel import scan_kernels
from .digraph import (
    ArcSubset,
    Digraph,
    EdgeSubset,
    UnderlyingGraph,
    arc_induced_stats,
    bridges,
    is_totally_cyclic,
    max_partial_orientation,
    spanning_components,
    underlying_graph,
    weak_components,
)
from .polynomial import IntPolynomial
from .posets import enumerate_totally_cyclic_subsets

METHOD_IDS = ("mobius", "tcs", "tc")


def contraction_rank(d: Digraph, arcs: ArcSubset) -> int:
    """Rank of the digraph with the given totally cyclic subset
    contracted: (n - |V(S)| + c(S)) - c(D).

    Contracting a totally cyclic subset never changes the number of weak
    components, so this is vertices minus components of the contracted
    digraph. Raises ValueError on a non-totally-cyclic subset.
    """
    if not is_totally_cyclic(d, arcs):
        raise ValueError(f"arc subset {sorted(arcs)} is not totally cyclic")
    nv, nc = arc_induced_stats(d, arcs)
    return (d.n - nv + nc) - weak_components(d)


def coflow_poly_mobius(d: Digraph) -> IntPolynomial:
    """Method ``mobius``: sum of mu(empty, S) * x^contraction_rank(S)
    over the cycle-union family, with mu computed recursively."""
    family = enumerate_totally_cyclic_subsets(d)
    mu = family.mobius
    c_d = weak_components(d)
    coeffs: dict[int, int] = {}
    for subset in family:
        nv, nc = arc_induced_stats(d, subset)
        expo = (d.n - nv + nc) - c_d
        coeffs[expo] = coeffs.get(expo, 0) + mu[subset]
    return _from_sparse(coeffs)


def coflow_poly_totally_cyclic(d: Digraph) -> IntPolynomial:
    """Method ``tcs``: sum of (-1)^cycle_space_rank(S) * x^contraction_rank(S)
    over all totally cyclic arc subsets."""
    family = enumerate_totally_cyclic_subsets(d)
    c_d = weak_components(d)
    coeffs: dict[int, int] = {}
    for subset in family:
        nv, nc = arc_induced_stats(d, subset)
        rank = len(subset) - nv + nc
        expo = (d.n - nv + nc) - c_d
        coeffs[expo] = coeffs.get(expo, 0) + (-1 if rank & 1 else 1)
    return _from_sparse(coeffs)


def tc_subset_coefficient(d: Digraph, g: UnderlyingGraph, edges: EdgeSubset) -> int:
    """Signed contribution of one edge subset to the ``tc`` expansion.

    Zero unless the maximal partial orientation of the subset is totally
    cyclic (which is exactly when some totally cyclic partial
    orientation exists: adding antiparallel mates preserves total
    cyclicity). A surviving subset contributes the sum of
    (-1)^(cycle space rank) over all totally cyclic partial orientations
    with that exact support. That sum factors over the bridgeless units
    of the spanning subgraph: bridge digons and loops are forced and
    contribute trivially, an all-digon unit alternates with its corank,
    a unit without digons contributes once, and only mixed units (some
    digons, some one-way edges) need their orientation choices summed
    explicitly. The empty subset contributes +1 at the top exponent.
    """
    tails, heads, edge_arc_masks, edge_us, edge_vs, digon_fwd, digon_bwd = (
        _scan_inputs(d, g)
    )
    arcs = max_partial_orientation(g, edges)
    if not is_totally_cyclic(d, arcs):
        return 0
    comps = spanning_components(g, edges)
    bridge_mask = bridges(g, edges).mask
    return _kernels_py.subset_coefficient(
        d.n, tails, heads, edge_arc_masks, edge_us, edge_vs,
        g.digon_edge_mask(), digon_fwd, digon_bwd, edges.mask,
        comps, bridge_mask,
    )


def tc_membership(d: Digraph, g: UnderlyingGraph, edges: EdgeSubset) -> bool:
    """Does the edge subset contribute to the ``tc`` expansion?

    Membership requires a totally cyclic maximal partial orientation and
    a nonzero signed orientation count: in every bridgeless unit the
    digon choices must not cancel. For a subset forming a single unit
    this reduces to the bridge/redundancy reading (every digon a bridge,
    or some non-bridge digon redundant); with several units each one
    must pass on its own. The empty subset is a member.
    """
    return tc_subset_coefficient(d, g, edges) != 0


def _scan_inputs(d: Digraph, g: UnderlyingGraph):
    tails = [t for t, _ in d.arcs]
    heads = [h for _, h in d.arcs]
    edge_arc_masks = [e.arc_mask() for e in g.edges]
    edge_us = [e.u for e in g.edges]
    edge_vs = [e.v for e in g.edges]
    digon_fwd = [e.forward_arc if e.is_digon else -1 for e in g.edges]
    digon_bwd = [e.backward_arc if e.is_digon else -1 for e in g.edges]
    return tails, heads, edge_arc_masks, edge_us, edge_vs, digon_fwd, digon_bwd


def coflow_poly_edge_subsets(d: Digraph) -> IntPolynomial:
    """Method ``tc``: sum over edge subsets B of their signed
    orientation count times x^(components(V, B) - c(D)).

    The whole 2^|E| scan runs inside one kernel call; the compiled
    backend is picked when the instance fits its limits. Subsets failing
    the total-cyclicity pre-filter cost almost nothing; for the rest the
    per-subset work is local except in mixed bridgeless units, whose
    digon choices are summed directly.
    """
    g = underlying_graph(d)
    tails, heads, edge_arc_masks, edge_us, edge_vs, digon_fwd, digon_bwd = (
        _scan_inputs(d, g)
    )
    kernels = scan_kernels(d.n, d.m, g.num_edges)
    coeffs = kernels.edge_subset_scan(
        d.n, tails, heads, edge_arc_masks, edge_us, edge_vs,
        g.digon_edge_mask(), digon_fwd, digon_bwd, weak_components(d),
    )
    return IntPolynomial(coeffs)


_METHOD_FUNCS = {
    "mobius": coflow_poly_mobius,
    "tcs": coflow_poly_totally_cyclic,
    "tc": coflow_poly_edge_subsets,
}


def coflow_polynomial(d: Digraph, method: str = "tc") -> IntPolynomial:
    """The coflow polynomial by the chosen method id."""
    try:
        func = _METHOD_FUNCS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}, expected one of {METHOD_IDS}")
    return func(d)


def chromatic_polynomial(d: Digraph, method: str = "tc") -> IntPolynomial:
    """chi(D, x) = x^c(D) * psi(x); its value at k counts the acyclic
    colorings of D with k colors. The empty digraph gives the constant 1."""
    return coflow_polynomial(d, method).shift(weak_components(d))


def timed_polynomials(d: Digraph, method: str) -> tuple[IntPolynomial, IntPolynomial, float]:
    """(psi, chi, elapsed milliseconds) for one method; used by the CLI."""
    start = time.perf_counter()
    psi = coflow_polynomial(d, method)
    chi = psi.shift(weak_components(d))
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return psi, chi, elapsed_ms


def _from_sparse(coeffs: dict[int, int]) -> IntPolynomial:
    if not coeffs:
        return IntPolynomial()
    dense = [0] * (max(coeffs) + 1)
    for expo, c in coeffs.items():
        dense[expo] = c
    return IntPolynomial(dense)
