"""Brute-force ground truth.

Everything here is deliberately naive: direct enumeration with an
explicit state budget that fails loudly instead of approximating. These
functions are the independent side of every cross-check, so they never
call into the formula implementations.
"""

from __future__ import annotations

from itertools import product

from .digraph import Digraph, EdgeSubset, UnderlyingGraph, spanning_components, weak_components
from .polynomial import IntPolynomial

DEFAULT_STATE_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The enumeration would visit more states than the budget allows."""


def _check_budget(states: int, budget: int, what: str) -> None:
    if states > budget:
        raise BudgetExceededError(
            f"{what} needs {states} states, budget is {budget}"
        )


def _arcs_acyclic(arc_pairs) -> bool:
    """Kahn's algorithm on an explicit (tail, head) list; a loop or a
    digon counts as a directed cycle."""
    indeg: dict[int, int] = {}
    out: dict[int, list[int]] = {}
    for t, h in arc_pairs:
        indeg.setdefault(t, 0)
        indeg[h] = indeg.get(h, 0) + 1
        out.setdefault(h, [])
        out.setdefault(t, []).append(h)
    queue = [v for v, deg in indeg.items() if deg == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == len(indeg)


def count_acyclic_colorings(d: Digraph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Number of maps V -> {1..k} under which no color class induces a
    directed cycle.

    A directed cycle is monochromatic exactly when all arcs joining
    equal colors contain it, so one acyclicity check of the
    equal-color arc set decides each coloring.
    """
    if k < 0:
        raise ValueError(f"color count must be nonnegative, got {k}")
    _check_budget(k ** d.n, budget, "coloring enumeration")
    count = 0
    for coloring in product(range(k), repeat=d.n):
        mono = [(t, h) for t, h in d.arcs if coloring[t] == coloring[h]]
        if _arcs_acyclic(mono):
            count += 1
    return count


def count_nl_coflows_mod_k(d: Digraph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Number of Z_k-coflows whose support contains a feedback arc set.

    Coflows are enumerated through vertex potentials p, arc value
    p(head) - p(tail) mod k; the zero-value arc set must be acyclic
    (equivalently the support contains a feedback arc set). Each coflow
    is induced by exactly k^c(D) potentials, so the potential count is
    divided down rather than deduplicating vectors.
    """
    if k < 1:
        raise ValueError(f"group order must be positive, got {k}")
    _check_budget(k ** d.n, budget, "potential enumeration")
    good = 0
    for p in product(range(k), repeat=d.n):
        zero_arcs = [(t, h) for t, h in d.arcs if (p[h] - p[t]) % k == 0]
        if _arcs_acyclic(zero_arcs):
            good += 1
    scale = k ** weak_components(d)
    quotient, remainder = divmod(good, scale)
    if remainder:
        raise RuntimeError(
            f"potential count {good} not divisible by k^c = {scale}; "
            "coflow/potential bijection violated"
        )
    return quotient


def chromatic_poly_undirected(g: UnderlyingGraph, budget: int = DEFAULT_STATE_BUDGET) -> IntPolynomial:
    """Chromatic polynomial of an undirected multigraph by the subset
    expansion: sum over all edge subsets of (-1)^|B| x^components(V, B)."""
    ne = g.num_edges
    _check_budget(1 << ne, budget, "edge subset expansion")
    coeffs = [0] * (g.n + 1)
    for b in range(1 << ne):
        comps = spanning_components(g, EdgeSubset.from_mask(b))
        coeffs[comps] += -1 if b.bit_count() & 1 else 1
    return IntPolynomial(coeffs)


def chromatic_poly_deletion_contraction(g: UnderlyingGraph) -> IntPolynomial:
    """Chromatic polynomial by deletion and contraction; the internal
    cross-check for the subset expansion.

    Loops force the zero polynomial; contracting one of a parallel pair
    turns the mates into loops, so multiplicities collapse on their own.
    """
    edges = tuple((e.u, e.v) for e in g.edges)
    return _del_con(g.n, edges)


def _del_con(n: int, edges: tuple[tuple[int, int], ...]) -> IntPolynomial:
    if any(u == v for u, v in edges):
        return IntPolynomial()
    if not edges:
        return IntPolynomial.monomial(n)
    (u, v), rest = edges[0], edges[1:]
    deleted = _del_con(n, rest)
    # contract u-v: merge v into u, close the gap in vertex labels
    merged = []
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        merged.append((a - (a > v), b - (b > v)))
    contracted = _del_con(n - 1, tuple(merged))
    return deleted - contracted
