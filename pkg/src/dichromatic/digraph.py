"""Digraph and underlying-multigraph types plus structural predicates.

Digraphs here are multidigraphs: parallel arcs, antiparallel arcs and
loops are all allowed and preserved verbatim. Arc ids are positional
(the i-th arc of the input is arc id i, forever), which makes arc
subsets representable as bitmasks.

All values are immutable after construction and every operation is a
pure function, so everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class _IdSubset:
    """Subset of small nonnegative ids, backed by a bitmask.

    Iteration is always in increasing id order. Union (``|``),
    intersection (``&``) and difference (``-``) stay within the subclass.
    """

    __slots__ = ("_mask",)

    def __init__(self, ids: Iterable[int] = ()) -> None:
        mask = 0
        for i in ids:
            if i < 0:
                raise ValueError(f"ids must be nonnegative, got {i}")
            mask |= 1 << i
        self._mask = mask

    @classmethod
    def from_mask(cls, mask: int):
        if mask < 0:
            raise ValueError("mask must be nonnegative")
        obj = cls()
        obj._mask = mask
        return obj

    @property
    def mask(self) -> int:
        return self._mask

    def ids(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return i >= 0 and (self._mask >> i) & 1 == 1

    def __or__(self, other):
        self._check_kind(other)
        return type(self).from_mask(self._mask | other._mask)

    def __and__(self, other):
        self._check_kind(other)
        return type(self).from_mask(self._mask & other._mask)

    def __sub__(self, other):
        self._check_kind(other)
        return type(self).from_mask(self._mask & ~other._mask)

    def __le__(self, other) -> bool:
        """Subset-or-equal."""
        self._check_kind(other)
        return self._mask & ~other._mask == 0

    def __lt__(self, other) -> bool:
        self._check_kind(other)
        return self._mask != other._mask and self._mask & ~other._mask == 0

    def _check_kind(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._mask == other._mask

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._mask))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"


class ArcSubset(_IdSubset):
    """Subset of arc ids of a fixed digraph."""


class EdgeSubset(_IdSubset):
    """Subset of edge ids of a fixed underlying graph."""


@dataclass(frozen=True)
class Digraph:
    """A multidigraph: ``n`` vertices 0..n-1 and a positional arc list.

    ``arcs[i]`` is the (tail, head) pair of arc id ``i``. The empty
    digraph (n=0, m=0) is valid.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()) -> None:
        arc_list = tuple((int(t), int(h)) for t, h in arcs)
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        for i, (t, h) in enumerate(arc_list):
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(
                    f"arc {i} = ({t}, {h}) has an endpoint outside 0..{n - 1}"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arc_list)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def all_arcs(self) -> ArcSubset:
        return ArcSubset.from_mask((1 << self.m) - 1)

    def has_loop(self) -> bool:
        return any(t == h for t, h in self.arcs)

    def reverse_of(self, arc_id: int) -> tuple[int, int]:
        t, h = self.arcs[arc_id]
        return (h, t)


@dataclass(frozen=True)
class Edge:
    """One edge of an underlying multigraph, with its arc correspondence.

    ``u <= v`` always; ``forward_arc`` is the arc oriented u->v and
    ``backward_arc`` the arc oriented v->u. At least one is present;
    an edge carrying both is digon-capable. Loops only ever carry a
    forward arc.
    """

    u: int
    v: int
    forward_arc: Optional[int]
    backward_arc: Optional[int]

    @property
    def is_digon(self) -> bool:
        return self.forward_arc is not None and self.backward_arc is not None

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def arc_ids(self) -> tuple[int, ...]:
        ids = tuple(a for a in (self.forward_arc, self.backward_arc) if a is not None)
        return tuple(sorted(ids))

    def arc_mask(self) -> int:
        mask = 0
        for a in self.arc_ids():
            mask |= 1 << a
        return mask


@dataclass(frozen=True)
class UnderlyingGraph:
    """Undirected multigraph of a digraph, with the arc->edge partition."""

    n: int
    edges: tuple[Edge, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def all_edges(self) -> EdgeSubset:
        return EdgeSubset.from_mask((1 << self.num_edges) - 1)

    def digon_edge_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.edges):
            if e.is_digon:
                mask |= 1 << i
        return mask


def underlying_graph(d: Digraph) -> UnderlyingGraph:
    """Build the underlying undirected multigraph of ``d``.

    For each unordered vertex pair carrying a in one direction and b in
    the other, min(a, b) digon-capable edges are produced by pairing the
    antiparallel arcs in increasing arc-id order on both sides, and
    |a - b| one-way edges take the leftovers. Loops become one-way
    edges. Edge ids are assigned by increasing smallest contained arc id,
    which is deterministic because the arc->edge map partitions arc ids.
    """
    by_pair: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
    for arc_id, (t, h) in enumerate(d.arcs):
        u, v = (t, h) if t <= h else (h, t)
        fwd, bwd = by_pair.setdefault((u, v), ([], []))
        if t <= h:
            fwd.append(arc_id)
        else:
            bwd.append(arc_id)

    edges: list[Edge] = []
    for (u, v), (fwd, bwd) in by_pair.items():
        paired = min(len(fwd), len(bwd))
        for i in range(paired):
            edges.append(Edge(u, v, fwd[i], bwd[i]))
        for a in fwd[paired:]:
            edges.append(Edge(u, v, a, None))
        for a in bwd[paired:]:
            edges.append(Edge(u, v, None, a))
    edges.sort(key=lambda e: min(e.arc_ids()))
    return UnderlyingGraph(d.n, tuple(edges))


def max_partial_orientation(g: UnderlyingGraph, edges: EdgeSubset) -> ArcSubset:
    """All arc ids stored in the given edges (both directions for digons)."""
    mask = 0
    for e in edges:
        mask |= g.edges[e].arc_mask()
    return ArcSubset.from_mask(mask)


def _arc_endpoints(d: Digraph, arcs: ArcSubset) -> list[tuple[int, int]]:
    return [d.arcs[a] for a in arcs]


def arc_induced_stats(d: Digraph, arcs: ArcSubset) -> tuple[int, int]:
    """(vertex count, weak component count) of the arc-induced subdigraph.

    The vertex set is the endpoints of the chosen arcs only, never the
    whole of V.
    """
    pairs = _arc_endpoints(d, arcs)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = 0
    for t, h in pairs:
        for w in (t, h):
            if w not in parent:
                parent[w] = w
                comps += 1
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rh] = rt
            comps -= 1
    return len(parent), comps


def is_totally_cyclic(d: Digraph, arcs: ArcSubset) -> bool:
    """True iff every weak component of the arc-induced subdigraph is
    strongly connected.

    Equivalent characterizations: the arc set is a union of directed
    cycles; every arc has a return path. The empty subset qualifies
    vacuously; a single loop arc qualifies.
    """
    pairs = _arc_endpoints(d, arcs)
    if not pairs:
        return True
    # one-step reachability as bitset rows, then transitive closure
    reach: dict[int, int] = {}
    for t, h in pairs:
        reach.setdefault(t, 0)
        reach.setdefault(h, 0)
        reach[t] |= 1 << h
    verts = list(reach)
    for k in verts:
        kbit = 1 << k
        for u in verts:
            if reach[u] & kbit:
                reach[u] |= reach[k]
    return all(t == h or (reach[h] >> t) & 1 for t, h in pairs)


def is_acyclic(d: Digraph, arcs: ArcSubset) -> bool:
    """True iff the arc-induced subdigraph has no directed cycle.

    A loop is a 1-cycle and a digon (antiparallel pair) is a 2-cycle.
    """
    pairs = _arc_endpoints(d, arcs)
    if not pairs:
        return True
    indeg: dict[int, int] = {}
    out: dict[int, list[int]] = {}
    for t, h in pairs:
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


def spanning_components(g: UnderlyingGraph, edges: EdgeSubset) -> int:
    """Components of the spanning subgraph (V, edges), isolated vertices
    included."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = g.n
    for e in edges:
        edge = g.edges[e]
        ru, rv = find(edge.u), find(edge.v)
        if ru != rv:
            parent[rv] = ru
            comps -= 1
    return comps


def weak_components(d: Digraph) -> int:
    """Weakly connected components of the whole digraph, isolated
    vertices included."""
    parent = list(range(d.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = d.n
    for t, h in d.arcs:
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rh] = rt
            comps -= 1
    return comps


def bridges(g: UnderlyingGraph, edges: EdgeSubset) -> EdgeSubset:
    """Edges of the subset whose removal splits a component of (V, edges).

    Parallel edges are never bridges of each other and loops are never
    bridges; this is the standard lowpoint DFS, tracking the entering
    edge id so parallel edges survive.
    """
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        edge = g.edges[e]
        if edge.is_loop:
            continue
        adj.setdefault(edge.u, []).append((edge.v, e))
        adj.setdefault(edge.v, []).append((edge.u, e))

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridge_mask = 0
    timer = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # stack entries: (vertex, entering edge id, adjacency cursor)
        stack = [(root, -1, 0)]
        while stack:
            v, in_edge, cursor = stack[-1]
            if cursor < len(adj[v]):
                stack[-1] = (v, in_edge, cursor + 1)
                w, e = adj[v][cursor]
                if e == in_edge:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        bridge_mask |= 1 << in_edge
    return EdgeSubset.from_mask(bridge_mask)
