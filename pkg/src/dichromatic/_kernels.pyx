# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled subset-scan kernels.

Same interface as ``_kernels_py`` but with hard size limits so all state
fits in fixed C arrays and bitmasks fit in 64-bit words: at most 64
vertices, 64 arcs and 62 underlying edges. Callers outside these limits
must use the pure-Python twin.
"""

from libc.stdint cimport int64_t, uint64_t

BACKEND_NAME = "compiled"

MAX_VERTICES = 64
MAX_ARCS = 64
MAX_EDGES = 62

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t ONE = 1


cdef bint _totally_cyclic(uint64_t arc_mask, const int* tails, const int* heads,
                          uint64_t* reach) nogil:
    # reach: caller-provided scratch of MAX_VERTICES rows
    cdef uint64_t vmask = 0, rem, rem2, kbit
    cdef int a, t, h, k, u
    if arc_mask == 0:
        return True
    rem = arc_mask
    while rem:
        a = __builtin_ctzll(rem)
        rem &= rem - 1
        vmask |= ONE << tails[a]
        vmask |= ONE << heads[a]
    rem = vmask
    while rem:
        u = __builtin_ctzll(rem)
        rem &= rem - 1
        reach[u] = 0
    rem = arc_mask
    while rem:
        a = __builtin_ctzll(rem)
        rem &= rem - 1
        reach[tails[a]] |= ONE << heads[a]
    # transitive closure over the active vertices (bitset Floyd-Warshall)
    rem = vmask
    while rem:
        k = __builtin_ctzll(rem)
        rem &= rem - 1
        kbit = ONE << k
        rem2 = vmask
        while rem2:
            u = __builtin_ctzll(rem2)
            rem2 &= rem2 - 1
            if reach[u] & kbit:
                reach[u] |= reach[k]
    rem = arc_mask
    while rem:
        a = __builtin_ctzll(rem)
        rem &= rem - 1
        t = tails[a]
        h = heads[a]
        if t != h and not (reach[h] >> t) & 1:
            return False
    return True


cdef uint64_t _spanning_stats(int n, uint64_t edge_bits, const int* edge_us,
                              const int* edge_vs, int* comps_out,
                              int* adj_start, int* adj_to, int* adj_eid,
                              int* deg, int* disc, int* lowpt,
                              int* stack_v, int* stack_in, int* stack_cur) nogil:
    # CSR adjacency over the chosen non-loop edges, then iterative
    # lowpoint DFS; returns the bridge mask and writes the component
    # count (isolated vertices included) through comps_out.
    cdef uint64_t rem, bridge_mask = 0
    cdef int e, u, v, w, sp, comps = 0, timer = 0, in_edge, cursor, pv

    for u in range(n):
        deg[u] = 0
    rem = edge_bits
    while rem:
        e = __builtin_ctzll(rem)
        rem &= rem - 1
        u = edge_us[e]
        v = edge_vs[e]
        if u != v:
            deg[u] += 1
            deg[v] += 1
    adj_start[0] = 0
    for u in range(n):
        adj_start[u + 1] = adj_start[u] + deg[u]
        deg[u] = adj_start[u]
    rem = edge_bits
    while rem:
        e = __builtin_ctzll(rem)
        rem &= rem - 1
        u = edge_us[e]
        v = edge_vs[e]
        if u != v:
            adj_to[deg[u]] = v
            adj_eid[deg[u]] = e
            deg[u] += 1
            adj_to[deg[v]] = u
            adj_eid[deg[v]] = e
            deg[v] += 1

    for u in range(n):
        disc[u] = -1
    for u in range(n):
        if disc[u] != -1:
            continue
        comps += 1
        disc[u] = lowpt[u] = timer
        timer += 1
        sp = 0
        stack_v[0] = u
        stack_in[0] = -1
        stack_cur[0] = adj_start[u]
        while sp >= 0:
            v = stack_v[sp]
            in_edge = stack_in[sp]
            cursor = stack_cur[sp]
            if cursor < adj_start[v + 1]:
                stack_cur[sp] = cursor + 1
                w = adj_to[cursor]
                e = adj_eid[cursor]
                if e == in_edge:
                    continue
                if disc[w] != -1:
                    if disc[w] < lowpt[v]:
                        lowpt[v] = disc[w]
                else:
                    disc[w] = lowpt[w] = timer
                    timer += 1
                    sp += 1
                    stack_v[sp] = w
                    stack_in[sp] = e
                    stack_cur[sp] = adj_start[w]
            else:
                sp -= 1
                if sp >= 0:
                    pv = stack_v[sp]
                    if lowpt[v] < lowpt[pv]:
                        lowpt[pv] = lowpt[v]
                    if lowpt[v] > disc[pv]:
                        bridge_mask |= ONE << in_edge
    comps_out[0] = comps
    return bridge_mask


cdef int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int64_t _unit_inner_sum(int n, const int* tails, const int* heads,
                             uint64_t unit_bits, const uint64_t* emask,
                             uint64_t digon_mask, const int* digon_fwd,
                             const int* digon_bwd, uint64_t* reach,
                             int* digons, int* choice) nogil:
    # signed orientation sum S of one bridgeless unit; see the
    # pure-Python twin for the derivation
    cdef uint64_t rem, dig_bits, fixed, vmask, mask
    cdef int e, nd = 0, nu = 0, i, corank
    cdef int64_t total = 0, weight

    dig_bits = unit_bits & digon_mask
    rem = unit_bits
    while rem:
        e = __builtin_ctzll(rem)
        rem &= rem - 1
        nu += 1
    rem = dig_bits
    while rem:
        e = __builtin_ctzll(rem)
        rem &= rem - 1
        digons[nd] = e
        nd += 1
    if nd == 0:
        return 1
    if nd == nu:
        # all-digon unit: alternate with the corank
        vmask = 0
        rem = unit_bits
        while rem:
            e = __builtin_ctzll(rem)
            rem &= rem - 1
            vmask |= ONE << tails[digon_fwd[e]]
            vmask |= ONE << heads[digon_fwd[e]]
        corank = nu - __builtin_popcountll(vmask) + 1
        return -1 if corank & 1 else 1
    fixed = 0
    rem = unit_bits & ~digon_mask
    while rem:
        e = __builtin_ctzll(rem)
        rem &= rem - 1
        fixed |= emask[e]
    for i in range(nd):
        choice[i] = 0
    while True:
        mask = fixed
        weight = 1
        for i in range(nd):
            e = digons[i]
            if choice[i] == 0:
                mask |= ONE << digon_fwd[e]
                weight = -weight
            elif choice[i] == 1:
                mask |= ONE << digon_bwd[e]
                weight = -weight
            else:
                mask |= emask[e]
        if _totally_cyclic(mask, tails, heads, reach):
            total += weight
        i = 0
        while i < nd and choice[i] == 2:
            choice[i] = 0
            i += 1
        if i == nd:
            break
        choice[i] += 1
    return total


def is_totally_cyclic_mask(int n, tails, heads, arc_mask):
    """Compiled twin of ``_kernels_py.is_totally_cyclic_mask``."""
    cdef int m = len(tails)
    if n > MAX_VERTICES or m > MAX_ARCS:
        raise ValueError("instance exceeds compiled kernel limits")
    cdef int ctails[64]
    cdef int cheads[64]
    cdef uint64_t reach[64]
    cdef uint64_t mask = <uint64_t> arc_mask
    cdef int i
    for i in range(m):
        ctails[i] = tails[i]
        cheads[i] = heads[i]
    return bool(_totally_cyclic(mask, ctails, cheads, reach))


def edge_subset_scan(int n, tails, heads, edge_arc_masks, edge_us, edge_vs,
                     digon_mask, digon_fwd, digon_bwd, c_d):
    """Compiled twin of ``_kernels_py.edge_subset_scan``."""
    cdef int m = len(tails)
    cdef int ne = len(edge_arc_masks)
    if n > MAX_VERTICES or m > MAX_ARCS or ne > MAX_EDGES:
        raise ValueError("instance exceeds compiled kernel limits")

    cdef int ctails[64]
    cdef int cheads[64]
    cdef uint64_t emask[62]
    cdef int eus[62]
    cdef int evs[62]
    cdef int dfwd[62]
    cdef int dbwd[62]
    cdef int64_t coeffs[65]
    cdef uint64_t reach[64]
    cdef int adj_start[65]
    cdef int adj_to[124]
    cdef int adj_eid[124]
    cdef int deg[64]
    cdef int disc[64]
    cdef int lowpt[64]
    cdef int stack_v[64]
    cdef int stack_in[64]
    cdef int stack_cur[64]
    cdef int parent[64]
    cdef int digons[62]
    cdef int choice[62]
    cdef uint64_t unit_bits[62]

    cdef int i, cd = c_d
    for i in range(m):
        ctails[i] = tails[i]
        cheads[i] = heads[i]
    for i in range(ne):
        emask[i] = <uint64_t> edge_arc_masks[i]
        eus[i] = edge_us[i]
        evs[i] = edge_vs[i]
        dfwd[i] = digon_fwd[i]
        dbwd[i] = digon_bwd[i]
    for i in range(n + 1):
        coeffs[i] = 0

    cdef uint64_t dmask = <uint64_t> digon_mask
    cdef uint64_t total = ONE << ne
    cdef uint64_t b, rem, low, arc_mask, bridge_mask
    cdef int e, u, v, ru, rv, comps, oneway, nunits, root
    cdef int64_t product, s
    cdef bint zero

    with nogil:
        b = 0
        while b < total:
            arc_mask = 0
            rem = b
            while rem:
                arc_mask |= emask[__builtin_ctzll(rem)]
                rem &= rem - 1
            if not _totally_cyclic(arc_mask, ctails, cheads, reach):
                b += 1
                continue
            bridge_mask = _spanning_stats(n, b, eus, evs, &comps,
                                          adj_start, adj_to, adj_eid, deg,
                                          disc, lowpt, stack_v, stack_in,
                                          stack_cur)
            # bridgeless units: union-find over non-bridge, non-loop edges
            for u in range(n):
                parent[u] = u
            oneway = 0
            rem = b
            while rem:
                low = rem & (~rem + 1)
                e = __builtin_ctzll(rem)
                rem &= rem - 1
                if not (dmask >> e) & 1:
                    oneway += 1
                u = eus[e]
                v = evs[e]
                if u == v or (bridge_mask >> e) & 1:
                    continue
                ru = _find(parent, u)
                rv = _find(parent, v)
                if ru != rv:
                    parent[rv] = ru
            # deg[] doubles as root -> unit slot map; -1 when unseen
            for u in range(n):
                deg[u] = -1
            nunits = 0
            rem = b
            while rem:
                low = rem & (~rem + 1)
                e = __builtin_ctzll(rem)
                rem &= rem - 1
                u = eus[e]
                v = evs[e]
                if u == v or (bridge_mask >> e) & 1:
                    continue
                root = _find(parent, u)
                if deg[root] == -1:
                    deg[root] = nunits
                    unit_bits[nunits] = 0
                    nunits += 1
                unit_bits[deg[root]] |= low
            product = 1
            zero = False
            for i in range(nunits):
                s = _unit_inner_sum(n, ctails, cheads, unit_bits[i], emask,
                                    dmask, dfwd, dbwd, reach, digons, choice)
                if s == 0:
                    zero = True
                    break
                product *= s
            if not zero:
                if (n + comps + oneway) & 1:
                    coeffs[comps - cd] -= product
                else:
                    coeffs[comps - cd] += product
            b += 1

    return [coeffs[i] for i in range(n + 1)]
