import pytest

from dichromatic import (
    ArcSubset,
    Digraph,
    EdgeSubset,
    IntPolynomial,
    bridges,
    chromatic_polynomial,
    coflow_poly_edge_subsets,
    coflow_poly_mobius,
    coflow_poly_totally_cyclic,
    coflow_polynomial,
    contraction_rank,
    enumerate_totally_cyclic_subsets,
    spanning_components,
    tc_membership,
    underlying_graph,
    weak_components,
)
from dichromatic.digraph import arc_induced_stats

import corpus

DIRECTED_TRIANGLE = Digraph(3, [(0, 1), (1, 2), (2, 0)])
DIGON = Digraph(2, [(0, 1), (1, 0)])
SYMMETRIC_TRIANGLE = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)])
SINGLE_ARC = Digraph(2, [(0, 1)])


class TestContractionRank:
    def test_full_triangle_contracts_to_point(self):
        assert contraction_rank(DIRECTED_TRIANGLE, ArcSubset([0, 1, 2])) == 0

    def test_empty_subset_gives_incidence_rank(self):
        assert contraction_rank(DIRECTED_TRIANGLE, ArcSubset()) == 2
        assert contraction_rank(Digraph(4, [(0, 1)]), ArcSubset()) == 4 - 3

    def test_one_digon_of_symmetric_triangle(self):
        assert contraction_rank(SYMMETRIC_TRIANGLE, ArcSubset([0, 1])) == 1

    def test_rejects_non_totally_cyclic(self):
        with pytest.raises(ValueError):
            contraction_rank(SINGLE_ARC, ArcSubset([0]))


class TestPsiKnownValues:
    def test_single_arc(self):
        expected = IntPolynomial([0, 1])  # x
        assert coflow_poly_mobius(SINGLE_ARC) == expected
        assert coflow_poly_totally_cyclic(SINGLE_ARC) == expected
        assert coflow_poly_edge_subsets(SINGLE_ARC) == expected

    def test_directed_triangle(self):
        expected = IntPolynomial([-1, 0, 1])  # x^2 - 1
        assert coflow_poly_mobius(DIRECTED_TRIANGLE) == expected
        assert coflow_poly_totally_cyclic(DIRECTED_TRIANGLE) == expected
        assert coflow_poly_edge_subsets(DIRECTED_TRIANGLE) == expected

    def test_digon(self):
        expected = IntPolynomial([-1, 1])  # x - 1, the K2 chromatic poly over x
        assert coflow_poly_mobius(DIGON) == expected
        assert coflow_poly_edge_subsets(DIGON) == expected

    def test_symmetric_triangle(self):
        expected = IntPolynomial([2, -3, 1])  # (x-1)(x-2)
        assert coflow_poly_mobius(SYMMETRIC_TRIANGLE) == expected
        assert coflow_poly_totally_cyclic(SYMMETRIC_TRIANGLE) == expected
        assert coflow_poly_edge_subsets(SYMMETRIC_TRIANGLE) == expected

    def test_even_directed_cycle(self):
        # sign-sensitive case: the full edge set is cycle space rank 1,
        # bridge-free, so it contributes -1 regardless of |B| parity
        c4 = corpus.directed_cycle(4)
        expected = IntPolynomial([-1, 0, 0, 1])  # x^3 - 1
        assert coflow_poly_edge_subsets(c4) == expected
        assert coflow_poly_mobius(c4) == expected

    def test_partially_symmetric_four_cycle(self):
        # C4 plus the reverse of one arc: the full edge set has a single
        # non-bridge digon that is not redundant, so it drops out
        d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)])
        expected = IntPolynomial([0, 0, -1, 1])  # x^3 - x^2
        assert coflow_poly_edge_subsets(d) == expected
        assert coflow_poly_totally_cyclic(d) == expected
        assert coflow_poly_mobius(d) == expected


class TestTcMembership:
    def test_empty_subset_is_member(self):
        g = underlying_graph(DIRECTED_TRIANGLE)
        assert tc_membership(DIRECTED_TRIANGLE, g, EdgeSubset())

    def test_directed_triangle_full(self):
        g = underlying_graph(DIRECTED_TRIANGLE)
        assert tc_membership(DIRECTED_TRIANGLE, g, g.all_edges())

    def test_symmetric_triangle_full(self):
        g = underlying_graph(SYMMETRIC_TRIANGLE)
        assert tc_membership(SYMMETRIC_TRIANGLE, g, g.all_edges())

    def test_symmetric_path_bridge_digons(self):
        d = corpus.symmetric_digraph(3, [(0, 1), (1, 2)])
        g = underlying_graph(d)
        assert tc_membership(d, g, g.all_edges())

    def test_single_one_way_edge_not_member(self):
        g = underlying_graph(SINGLE_ARC)
        assert not tc_membership(SINGLE_ARC, g, g.all_edges())

    def test_irredundant_non_bridge_digon_not_member(self):
        d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)])
        g = underlying_graph(d)
        assert not tc_membership(d, g, g.all_edges())


def _per_subset_coefficient(d, g, edges):
    """Reference contribution of one edge subset, straight from the
    surface operations: membership test, corank + bridge sign,
    spanning-component exponent."""
    if not tc_membership(d, g, edges):
        return None
    comps = spanning_components(g, edges)
    beta = len(bridges(g, edges))
    corank = len(edges) + comps - g.n
    sign = -1 if (corank + beta) & 1 else 1
    return sign, comps


class TestEdgeExpansionAgainstGroundTruth:
    """Per edge subset: the signed membership contribution must equal the
    sum of (-1)^rank over totally cyclic orientations with that support.

    This pins the tc method to the tcs ground truth at subset
    granularity, which is much sharper than whole-polynomial equality.
    """

    def check(self, d):
        g = underlying_graph(d)
        fam = enumerate_totally_cyclic_subsets(d)
        # group family elements by underlying edge support
        arc_to_edge = {}
        for eid, e in enumerate(g.edges):
            for a in e.arc_ids():
                arc_to_edge[a] = eid
        support_sums: dict[int, int] = {}
        for s in fam:
            support = 0
            for a in s:
                support |= 1 << arc_to_edge[a]
            nv, nc = arc_induced_stats(d, s)
            rank = len(s) - nv + nc
            support_sums[support] = support_sums.get(support, 0) + (
                -1 if rank & 1 else 1
            )
        for b in range(1 << g.num_edges):
            edges = EdgeSubset.from_mask(b)
            contribution = _per_subset_coefficient(d, g, edges)
            expected = support_sums.get(b, 0)
            if contribution is None:
                assert expected == 0, (d.arcs, edges.ids())
            else:
                assert contribution[0] == expected, (d.arcs, edges.ids())

    def test_exhaustive_tiny(self):
        for d in corpus.exhaustive_digraphs(max_n=3, max_m=3):
            self.check(d)

    def test_selected_instances(self):
        for d in (
            SYMMETRIC_TRIANGLE,
            corpus.directed_cycle(4),
            corpus.directed_cycle(5),
            Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]),
            corpus.symmetric_digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
            Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 0)]),
        ):
            self.check(d)

    def test_random_instances(self):
        for d in corpus.random_digraphs(40, max_n=4, max_m=7, seed=411):
            self.check(d)


class TestKernelScanMatchesSurfaceDefinition:
    def check(self, d):
        g = underlying_graph(d)
        coeffs = {}
        c_d = weak_components(d)
        for b in range(1 << g.num_edges):
            edges = EdgeSubset.from_mask(b)
            contribution = _per_subset_coefficient(d, g, edges)
            if contribution is None:
                continue
            sign, comps = contribution
            expo = comps - c_d
            coeffs[expo] = coeffs.get(expo, 0) + sign
        dense = [0] * (max(coeffs, default=0) + 1)
        for expo, c in coeffs.items():
            dense[expo] = c
        assert coflow_poly_edge_subsets(d) == IntPolynomial(dense)

    def test_random(self):
        for d in corpus.random_digraphs(30, max_n=5, max_m=8, seed=88):
            self.check(d)


class TestChromatic:
    def test_single_arc_chi(self):
        assert chromatic_polynomial(SINGLE_ARC) == IntPolynomial([0, 0, 1])

    def test_directed_triangle_chi(self):
        assert chromatic_polynomial(DIRECTED_TRIANGLE) == IntPolynomial([0, -1, 0, 1])

    def test_symmetric_triangle_chi(self):
        x = IntPolynomial([0, 1])
        one = IntPolynomial([1])
        expected = x * (x - one) * (x - IntPolynomial([2]))
        assert chromatic_polynomial(SYMMETRIC_TRIANGLE) == expected

    def test_empty_digraph_chi_is_one(self):
        for method in ("mobius", "tcs", "tc"):
            assert chromatic_polynomial(Digraph(0, []), method) == IntPolynomial([1])

    def test_loop_annihilates(self):
        loopy = Digraph(3, [(0, 1), (1, 2), (1, 1)])
        for method in ("mobius", "tcs", "tc"):
            assert chromatic_polynomial(loopy, method) == IntPolynomial()

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError):
            coflow_polynomial(DIGON, "fastest")

    def test_isolated_vertices_shift(self):
        d = Digraph(3, [(0, 1), (1, 0)])  # digon plus isolated vertex
        assert chromatic_polynomial(d) == IntPolynomial([0, 0, -1, 1])


class TestMethodEquivalenceSmall:
    def test_exhaustive_tiny(self):
        for d in corpus.exhaustive_digraphs(max_n=2, max_m=4):
            a = coflow_poly_mobius(d)
            b = coflow_poly_totally_cyclic(d)
            c = coflow_poly_edge_subsets(d)
            assert a == b == c, d.arcs
