"""Pure-Python subset-scan kernels.

Twin of the compiled extension ``_kernels``: same functions, same
semantics, no size limits (masks are plain Python ints). The compiled
module is preferred at import time when present; this module is the
fallback and the reference the extension is tested against.
"""

from __future__ import annotations

BACKEND_NAME = "pure-python"

# no structural limits; mirrors the constants exported by the extension
MAX_VERTICES = None
MAX_ARCS = None
MAX_EDGES = None


def is_totally_cyclic_mask(n, tails, heads, arc_mask):
    """True iff every arc of the masked subset lies on a directed cycle
    inside the subset (every weak component strongly connected)."""
    if arc_mask == 0:
        return True
    reach = {}
    rem = arc_mask
    while rem:
        low = rem & -rem
        a = low.bit_length() - 1
        rem ^= low
        t, h = tails[a], heads[a]
        reach.setdefault(t, 0)
        reach.setdefault(h, 0)
        reach[t] |= 1 << h
    verts = list(reach)
    for k in verts:
        kbit = 1 << k
        for u in verts:
            if reach[u] & kbit:
                reach[u] |= reach[k]
    rem = arc_mask
    while rem:
        low = rem & -rem
        a = low.bit_length() - 1
        rem ^= low
        t, h = tails[a], heads[a]
        if t != h and not (reach[h] >> t) & 1:
            return False
    return True


def _spanning_stats(n, edge_bits, edge_us, edge_vs):
    """(component count incl. isolated vertices, bridge mask) of the
    spanning subgraph picked out by ``edge_bits``.

    Loops are skipped: they connect nothing and are never bridges.
    Parallel edges survive because only the entering edge id is skipped.
    """
    adj = [[] for _ in range(n)]
    rem = edge_bits
    while rem:
        low = rem & -rem
        e = low.bit_length() - 1
        rem ^= low
        u, v = edge_us[e], edge_vs[e]
        if u != v:
            adj[u].append((v, e))
            adj[v].append((u, e))

    disc = [-1] * n
    lowpt = [0] * n
    comps = 0
    bridge_mask = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        comps += 1
        disc[root] = lowpt[root] = timer
        timer += 1
        stack = [(root, -1, 0)]
        while stack:
            v, in_edge, cursor = stack[-1]
            if cursor < len(adj[v]):
                stack[-1] = (v, in_edge, cursor + 1)
                w, e = adj[v][cursor]
                if e == in_edge:
                    continue
                if disc[w] != -1:
                    if disc[w] < lowpt[v]:
                        lowpt[v] = disc[w]
                else:
                    disc[w] = lowpt[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if lowpt[v] < lowpt[pv]:
                        lowpt[pv] = lowpt[v]
                    if lowpt[v] > disc[pv]:
                        bridge_mask |= 1 << in_edge
    return comps, bridge_mask


def _unit_inner_sum(n, tails, heads, unit_edges, edge_arc_masks, digon_mask,
                    digon_fwd, digon_bwd):
    """Signed orientation sum S of one bridgeless unit.

    S sums (-1)^(number of single-direction digon choices) over all
    choices (forward / backward / both) per digon edge of the unit that
    keep the chosen arc set totally cyclic. One-way arcs of the unit are
    always present. Closed forms: an all-digon unit alternates with its
    corank; a unit without digons contributes 1. Mixed units need the
    explicit sum: no local formula exists for them.
    """
    digons = [e for e in unit_edges if (digon_mask >> e) & 1]
    if not digons:
        return 1
    if len(digons) == len(unit_edges):
        verts = set()
        for e in unit_edges:
            verts.add(tails[digon_fwd[e]])
            verts.add(heads[digon_fwd[e]])
        corank = len(unit_edges) - len(verts) + 1
        return -1 if corank & 1 else 1
    fixed = 0
    for e in unit_edges:
        if not (digon_mask >> e) & 1:
            fixed |= edge_arc_masks[e]
    total = 0
    choice = [0] * len(digons)
    while True:
        mask = fixed
        weight = 1
        for i, e in enumerate(digons):
            c = choice[i]
            if c == 0:
                mask |= 1 << digon_fwd[e]
                weight = -weight
            elif c == 1:
                mask |= 1 << digon_bwd[e]
                weight = -weight
            else:
                mask |= edge_arc_masks[e]
        if is_totally_cyclic_mask(n, tails, heads, mask):
            total += weight
        i = 0
        while i < len(digons) and choice[i] == 2:
            choice[i] = 0
            i += 1
        if i == len(digons):
            break
        choice[i] += 1
    return total


def subset_coefficient(n, tails, heads, edge_arc_masks, edge_us, edge_vs,
                       digon_mask, digon_fwd, digon_bwd, edge_bits,
                       comps, bridge_mask):
    """Signed contribution of one edge subset, given its spanning stats.

    The maximal partial orientation must already be known totally
    cyclic. The contribution is (-1)^(n + components + one-way edges)
    times the product of the unit orientation sums; bridge digons and
    loops contribute trivial factors.
    """
    # union-find over non-bridge, non-loop edges yields the bridgeless units
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    oneway = 0
    unit_edge_bits = 0
    rem = edge_bits
    while rem:
        low = rem & -rem
        e = low.bit_length() - 1
        rem ^= low
        u, v = edge_us[e], edge_vs[e]
        if not (digon_mask >> e) & 1:
            oneway += 1
        if u == v or (bridge_mask >> e) & 1:
            continue
        unit_edge_bits |= low
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru

    units: dict[int, list[int]] = {}
    rem = unit_edge_bits
    while rem:
        low = rem & -rem
        e = low.bit_length() - 1
        rem ^= low
        units.setdefault(find(edge_us[e]), []).append(e)

    product = 1
    for unit_edges in units.values():
        s = _unit_inner_sum(n, tails, heads, unit_edges, edge_arc_masks,
                            digon_mask, digon_fwd, digon_bwd)
        if s == 0:
            return 0
        product *= s
    return -product if (n + comps + oneway) & 1 else product


def edge_subset_scan(n, tails, heads, edge_arc_masks, edge_us, edge_vs,
                     digon_mask, digon_fwd, digon_bwd, c_d):
    """Coefficients of the edge-subset expansion of the coflow polynomial.

    Scans every subset B of the underlying edges. The total-cyclicity
    check of the maximal partial orientation runs first (the cheap
    necessary condition); surviving subsets contribute their signed
    orientation count at exponent components(V, B) - c_d. Returns the
    dense coefficient list, degree 0 .. n.
    """
    ne = len(edge_arc_masks)
    coeffs = [0] * (n + 1)
    for b in range(1 << ne):
        arc_mask = 0
        rem = b
        while rem:
            low = rem & -rem
            arc_mask |= edge_arc_masks[low.bit_length() - 1]
            rem ^= low
        if not is_totally_cyclic_mask(n, tails, heads, arc_mask):
            continue
        comps, bridge_mask = _spanning_stats(n, b, edge_us, edge_vs)
        coeffs[comps - c_d] += subset_coefficient(
            n, tails, heads, edge_arc_masks, edge_us, edge_vs,
            digon_mask, digon_fwd, digon_bwd, b, comps, bridge_mask,
        )
    return coeffs
