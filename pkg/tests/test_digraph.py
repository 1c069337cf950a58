import pytest

from dichromatic import (
    ArcSubset,
    Digraph,
    EdgeSubset,
    bridges,
    is_acyclic,
    is_totally_cyclic,
    max_partial_orientation,
    spanning_components,
    underlying_graph,
    weak_components,
)


def arcset(*ids):
    return ArcSubset(ids)


def edgeset(*ids):
    return EdgeSubset(ids)


class TestSubsets:
    def test_iteration_increasing(self):
        s = ArcSubset([5, 1, 3])
        assert list(s) == [1, 3, 5]
        assert s.ids() == (1, 3, 5)

    def test_set_algebra(self):
        a = ArcSubset([0, 1])
        b = ArcSubset([1, 2])
        assert (a | b).ids() == (0, 1, 2)
        assert (a - b).ids() == (0,)
        assert (a & b).ids() == (1,)
        assert ArcSubset([0]) <= a
        assert ArcSubset([0]) < a
        assert not a < a

    def test_kind_separation(self):
        assert ArcSubset([1]) != EdgeSubset([1])
        with pytest.raises(TypeError):
            ArcSubset([1]) | EdgeSubset([1])

    def test_mask_round_trip(self):
        assert ArcSubset.from_mask(0b101).ids() == (0, 2)
        assert ArcSubset([0, 2]).mask == 0b101
        assert len(ArcSubset([0, 2])) == 2
        assert 2 in ArcSubset([0, 2])
        assert 1 not in ArcSubset([0, 2])


class TestDigraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 2)])
        with pytest.raises(ValueError):
            Digraph(-1, [])

    def test_empty_digraph_valid(self):
        d = Digraph(0, [])
        assert d.n == 0 and d.m == 0

    def test_arc_ids_positional(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        assert d.arcs[0] == (0, 1)
        assert d.arcs[1] == (1, 2)
        assert d.all_arcs().ids() == (0, 1)

    def test_loops_allowed(self):
        d = Digraph(1, [(0, 0)])
        assert d.has_loop()


class TestUnderlyingGraph:
    def test_single_arc(self):
        g = underlying_graph(Digraph(2, [(0, 1)]))
        assert g.num_edges == 1
        e = g.edges[0]
        assert (e.u, e.v) == (0, 1)
        assert e.forward_arc == 0 and e.backward_arc is None
        assert not e.is_digon

    def test_antiparallel_pair_becomes_digon(self):
        g = underlying_graph(Digraph(2, [(0, 1), (1, 0)]))
        assert g.num_edges == 1
        e = g.edges[0]
        assert e.is_digon
        assert e.arc_ids() == (0, 1)

    def test_greedy_pairing_two_forward_one_backward(self):
        # arcs (0->1), (0->1), (1->0): digon pairs arc 0 with arc 2,
        # arc 1 is left as a one-way edge
        g = underlying_graph(Digraph(2, [(0, 1), (0, 1), (1, 0)]))
        assert g.num_edges == 2
        digon, oneway = g.edges
        assert digon.is_digon and digon.arc_ids() == (0, 2)
        assert not oneway.is_digon and oneway.arc_ids() == (1,)

    def test_loop_is_one_way_edge(self):
        g = underlying_graph(Digraph(1, [(0, 0)]))
        e = g.edges[0]
        assert e.is_loop and e.forward_arc == 0 and e.backward_arc is None

    def test_arc_partition(self):
        d = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 2), (0, 1)])
        g = underlying_graph(d)
        seen = [a for e in g.edges for a in e.arc_ids()]
        assert sorted(seen) == list(range(d.m))

    def test_backward_only_edge(self):
        # single arc 1 -> 0 sits in the backward slot of edge {0, 1}
        g = underlying_graph(Digraph(2, [(1, 0)]))
        e = g.edges[0]
        assert (e.u, e.v) == (0, 1)
        assert e.forward_arc is None and e.backward_arc == 0


class TestMaxPartialOrientation:
    def test_empty(self):
        g = underlying_graph(Digraph(2, [(0, 1), (1, 0)]))
        assert max_partial_orientation(g, edgeset()).ids() == ()

    def test_digon_edge_gives_both_arcs(self):
        g = underlying_graph(Digraph(2, [(0, 1), (1, 0)]))
        assert max_partial_orientation(g, edgeset(0)).ids() == (0, 1)

    def test_one_way_edge_gives_single_arc(self):
        g = underlying_graph(Digraph(2, [(0, 1)]))
        assert max_partial_orientation(g, edgeset(0)).ids() == (0,)


class TestTotallyCyclic:
    def test_directed_triangle(self):
        d = Digraph(3, [(0, 1), (1, 2), (2, 0)])
        assert is_totally_cyclic(d, arcset(0, 1, 2))

    def test_single_arc_not(self):
        d = Digraph(2, [(0, 1)])
        assert not is_totally_cyclic(d, arcset(0))

    def test_single_loop_is(self):
        d = Digraph(1, [(0, 0)])
        assert is_totally_cyclic(d, arcset(0))

    def test_empty_subset_is(self):
        d = Digraph(3, [(0, 1)])
        assert is_totally_cyclic(d, arcset())

    def test_two_disjoint_cycles(self):
        d = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
        assert is_totally_cyclic(d, arcset(0, 1, 2, 3))
        assert not is_totally_cyclic(d, arcset(0, 1, 2))

    def test_cycle_plus_pendant_arc_not(self):
        d = Digraph(3, [(0, 1), (1, 0), (1, 2)])
        assert not is_totally_cyclic(d, arcset(0, 1, 2))


class TestAcyclic:
    def test_path(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        assert is_acyclic(d, arcset(0, 1))

    def test_digon_is_cycle(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert not is_acyclic(d, arcset(0, 1))

    def test_loop_is_cycle(self):
        d = Digraph(1, [(0, 0)])
        assert not is_acyclic(d, arcset(0))

    def test_empty(self):
        assert is_acyclic(Digraph(2, [(0, 1)]), arcset())

    def test_only_empty_is_both(self):
        # acyclic and totally cyclic at once forces the empty subset
        d = Digraph(3, [(0, 1), (1, 2), (2, 0), (0, 0)])
        for mask in range(1 << d.m):
            s = ArcSubset.from_mask(mask)
            if is_acyclic(d, s) and is_totally_cyclic(d, s):
                assert mask == 0


class TestUndirectedStats:
    def test_spanning_components(self):
        g = underlying_graph(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
        assert spanning_components(g, edgeset()) == 3
        assert spanning_components(g, edgeset(0)) == 2
        assert spanning_components(g, g.all_edges()) == 1

    def test_spanning_components_drops_at_most_one(self):
        g = underlying_graph(Digraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
        current = edgeset()
        for e in range(g.num_edges):
            grown = current | edgeset(e)
            drop = spanning_components(g, current) - spanning_components(g, grown)
            assert drop in (0, 1)
            current = grown

    def test_loop_does_not_merge(self):
        g = underlying_graph(Digraph(2, [(0, 0)]))
        assert spanning_components(g, g.all_edges()) == 2

    def test_bridges_path(self):
        g = underlying_graph(Digraph(3, [(0, 1), (1, 2)]))
        assert bridges(g, g.all_edges()).ids() == (0, 1)

    def test_bridges_triangle_none(self):
        g = underlying_graph(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
        assert bridges(g, g.all_edges()).ids() == ()

    def test_parallel_edges_not_bridges(self):
        g = underlying_graph(Digraph(2, [(0, 1), (0, 1)]))
        assert g.num_edges == 2
        assert bridges(g, g.all_edges()).ids() == ()
        assert bridges(g, edgeset(0)).ids() == (0,)

    def test_loops_never_bridges(self):
        g = underlying_graph(Digraph(2, [(0, 1), (0, 0)]))
        assert bridges(g, g.all_edges()).ids() == (0,)

    def test_bridge_removal_increases_components(self):
        d = Digraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        g = underlying_graph(d)
        full = g.all_edges()
        for e in bridges(g, full):
            before = spanning_components(g, full)
            after = spanning_components(g, full - EdgeSubset([e]))
            assert after == before + 1

    def test_weak_components(self):
        assert weak_components(Digraph(2, [])) == 2
        assert weak_components(Digraph(3, [(0, 1), (1, 2), (2, 0)])) == 1
        assert weak_components(Digraph(4, [(0, 1), (1, 2), (2, 0)])) == 2


def test_antiparallel_mates_preserve_total_cyclicity():
    # adding reverse arcs over the same edges keeps the subset totally cyclic
    d = Digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0), (2, 1)])
    base = arcset(0, 1, 2)
    assert is_totally_cyclic(d, base)
    mate_ids = [
        i for i, (t, h) in enumerate(d.arcs)
        if any(d.arcs[b] == (h, t) for b in base)
    ]
    grown = base | ArcSubset(mate_ids)
    assert is_totally_cyclic(d, grown)
