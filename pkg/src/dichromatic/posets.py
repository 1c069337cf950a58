"""Totally cyclic arc subsets as a poset, with its Mobius function.

The family of totally cyclic arc subsets of a digraph, ordered by
inclusion, is the common ground set of both counting formulas that sum
over subdigraphs: each element is exactly a union of elementary directed
cycles. The Mobius function is computed from its recursive definition;
the graded-rank shortcut lives in :func:`cycle_space_rank` and is tested
against it, never substituted for it here.
"""

from __future__ import annotations

from functools import cached_property

from .digraph import ArcSubset, Digraph, arc_induced_stats, is_totally_cyclic


def enumerate_directed_cycles(d: Digraph) -> list[ArcSubset]:
    """All elementary directed cycles (no repeated vertex) as arc subsets.

    Loops are 1-cycles and antiparallel pairs are 2-cycles. Parallel
    arcs yield one cycle per arc choice. Output is deterministic:
    sorted lexicographically by the tuple of member arc ids.
    """
    out_arcs: list[list[int]] = [[] for _ in range(d.n)]
    for arc_id, (t, _h) in enumerate(d.arcs):
        out_arcs[t].append(arc_id)

    cycles: list[tuple[int, ...]] = []
    for start in range(d.n):
        # DFS over arcs; only vertices > start may appear inside a path,
        # so each cycle is reported exactly once, from its minimal vertex.
        path_arcs: list[int] = []
        on_path = {start}

        def walk(v: int) -> None:
            for arc_id in out_arcs[v]:
                head = d.arcs[arc_id][1]
                if head == start:
                    cycles.append(tuple(sorted(path_arcs + [arc_id])))
                elif head > start and head not in on_path:
                    on_path.add(head)
                    path_arcs.append(arc_id)
                    walk(head)
                    path_arcs.pop()
                    on_path.remove(head)

        walk(start)
    cycles.sort()
    return [ArcSubset(c) for c in cycles]


class CycleUnionPoset:
    """The totally cyclic arc subsets of a digraph, ordered by inclusion.

    Elements are deduplicated, always include the empty subset, and are
    exposed in lexicographic order of their arc-id tuples. The family is
    closed under union, and membership coincides with
    :func:`~dichromatic.digraph.is_totally_cyclic`.
    """

    def __init__(self, digraph: Digraph, elements: list[ArcSubset]) -> None:
        self.digraph = digraph
        self.elements = tuple(sorted(elements, key=lambda s: s.ids()))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, subset: ArcSubset) -> bool:
        return subset.mask in self._mask_index

    @cached_property
    def _mask_index(self) -> dict[int, int]:
        return {s.mask: i for i, s in enumerate(self.elements)}

    @cached_property
    def mobius(self) -> dict[ArcSubset, int]:
        """mu(empty, S) for every element S, by the recursive definition.

        mu(empty, empty) = 1 and mu(empty, S) = -sum of mu(empty, T) over
        proper predecessors T of S in the family. For dense families the
        inner sum enumerates submasks of S directly; for sparse ones it
        scans the smaller elements.
        """
        by_size = sorted(self.elements, key=lambda s: (len(s), s.ids()))
        mu_by_mask: dict[int, int] = {}
        known_masks: list[int] = []
        for s in by_size:
            smask = s.mask
            if smask == 0:
                mu_by_mask[0] = 1
                known_masks.append(0)
                continue
            total = 0
            if (1 << len(s)) <= len(known_masks):
                # walk all strict submasks of smask
                sub = (smask - 1) & smask
                while True:
                    val = mu_by_mask.get(sub)
                    if val is not None:
                        total += val
                    if sub == 0:
                        break
                    sub = (sub - 1) & smask
            else:
                for tmask in known_masks:
                    if tmask != smask and tmask & ~smask == 0:
                        total += mu_by_mask[tmask]
            mu_by_mask[smask] = -total
            known_masks.append(smask)
        return {s: mu_by_mask[s.mask] for s in self.elements}


def enumerate_totally_cyclic_subsets(d: Digraph) -> CycleUnionPoset:
    """The full family of totally cyclic arc subsets of ``d``.

    Computed as the union closure of the elementary directed cycles,
    which is exactly the family of subsets passing is_totally_cyclic
    (every totally cyclic set decomposes into elementary cycles).
    """
    cycle_masks = [c.mask for c in enumerate_directed_cycles(d)]
    family = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for base in frontier:
            for c in cycle_masks:
                union = base | c
                if union not in family:
                    family.add(union)
                    fresh.append(union)
        frontier = fresh
    return CycleUnionPoset(d, [ArcSubset.from_mask(m) for m in family])


def mobius_from_bottom(poset: CycleUnionPoset) -> dict[ArcSubset, int]:
    """mu(empty, S) for every element of the poset."""
    return poset.mobius


def cycle_space_rank(d: Digraph, arcs: ArcSubset) -> int:
    """|S| - |V(S)| + c(S): the cycle-space dimension of the arc-induced
    subdigraph, which grades the totally cyclic family.

    Raises ValueError when the subset is not totally cyclic; the rank is
    only meaningful on family members.
    """
    if not is_totally_cyclic(d, arcs):
        raise ValueError(f"arc subset {sorted(arcs)} is not totally cyclic")
    nv, nc = arc_induced_stats(d, arcs)
    return len(arcs) - nv + nc
