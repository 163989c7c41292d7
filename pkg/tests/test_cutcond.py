import random

import pytest

from pathpair.cutcond import (
    CutWitness,
    EnumerationCapExceeded,
    check_full_cut,
    check_k_cut,
    pp_upper_bound_from_witness,
    product_violation,
)
from pathpair.graph import (
    Graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    cycle_graph as cycle,
    edge_boundary,
    star_graph,
)
from pathpair.constructions import cut_ok_not_pp, grid_violating_subgrid


def induced_subgraph(g, vertices):
    vs = sorted(vertices)
    back = {v: i for i, v in enumerate(vs)}
    edges = [(back[u], back[v]) for u, v in g.edges if u in back and v in back]
    return Graph(len(vs), edges)


class TestCheckKCut:
    def test_star_k2_ok(self):
        assert check_k_cut(star_graph(3), 2) is None

    def test_connected_k1_ok(self):
        for g in (complete_graph(4), cycle_graph(5), star_graph(6)):
            assert check_k_cut(g, 1) is None

    def test_isolated_vertex_witness(self):
        g = Graph(3, [(0, 1)])
        w = check_k_cut(g, 1)
        assert w == CutWitness((2,), 0)

    def test_c4_full_ok(self):
        assert check_full_cut(cycle_graph(4)) is None

    def test_two_disjoint_edges_witness(self):
        g = Graph(4, [(0, 1), (2, 3)])
        w = check_full_cut(g)
        assert w is not None
        assert w.boundary == 0
        assert w.vertices == (0, 1)  # lexicographically first at smallest size

    def test_witness_is_first_lexicographic(self):
        # two isolated vertices: {3} and {4} both witness at size 1
        g = Graph(5, [(0, 1), (1, 2), (0, 2)])
        w = check_k_cut(g, 3)
        assert w.vertices == (3,)

    def test_cap_exceeded_is_an_error(self):
        with pytest.raises(EnumerationCapExceeded):
            check_k_cut(complete_graph(40), 20, cap=1000)

    def test_random_subsets_respect_ok_verdict(self):
        rng = random.Random(11)
        g = cartesian_product(cycle(5), cycle(4))
        k = 4
        assert check_k_cut(g, k) is None
        for _ in range(100):
            size = rng.randint(1, k)
            s = rng.sample(range(g.n), size)
            assert edge_boundary(g, s) >= size


class TestCutExamples:
    def test_matched_clique_k6_passes_full_cut(self):
        inst = cut_ok_not_pp(6, "matched_clique")
        assert inst.graph.n == 12
        assert check_full_cut(inst.graph) is None

    def test_clique_tail_k3_passes_exhaustive_cut(self):
        inst = cut_ok_not_pp(3, "clique_tail", clique_size=6)
        assert inst.graph.n == 10
        # exhaustive over every subset size up to n/2
        assert check_full_cut(inst.graph) is None


class TestProductViolation:
    def test_doubled_hypotheses_violate(self):
        pv = product_violation(5, 2, 5, 2)
        assert pv.violated
        assert pv.product_size == 25
        assert pv.product_edges == 20

    def test_boundary_case_no_claim(self):
        pv = product_violation(2, 1, 2, 1)
        assert not pv.violated
        assert pv.product_edges == 4

    def test_identity_matches_materialized_products(self):
        rng = random.Random(12)
        for _ in range(200):
            n1, n2 = rng.randint(1, 8), rng.randint(1, 8)
            g = Graph(n1, [(u, v) for u in range(n1) for v in range(u + 1, n1) if rng.random() < 0.4])
            h = Graph(n2, [(u, v) for u in range(n2) for v in range(u + 1, n2) if rng.random() < 0.4])
            s_g = rng.sample(range(n1), rng.randint(1, n1))
            s_h = rng.sample(range(n2), rng.randint(1, n2))
            g0 = induced_subgraph(g, s_g)
            h0 = induced_subgraph(h, s_h)
            pv = product_violation(g0.n, g0.num_edges, h0.n, h0.num_edges)
            material = cartesian_product(g0, h0) if g0.n and h0.n else None
            assert pv.product_edges == material.num_edges
            assert pv.product_size == material.n


class TestGridViolation:
    def test_d2_values(self):
        gv = grid_violating_subgrid(2)
        assert (gv.size, gv.boundary) == (20, 18)
        assert gv.dims == (4, 5)

    def test_d3_values(self):
        gv = grid_violating_subgrid(3)
        assert (gv.size, gv.boundary) == (252, 240)

    @pytest.mark.parametrize("d", range(2, 7))
    def test_size_beats_boundary(self, d):
        gv = grid_violating_subgrid(d)
        assert gv.size > gv.boundary


class TestPpUpperBound:
    def test_isolated_vertex(self):
        g = Graph(3, [(0, 1)])
        assert pp_upper_bound_from_witness(g, [2]) == 0

    def test_rejects_non_witness(self):
        with pytest.raises(ValueError):
            pp_upper_bound_from_witness(complete_graph(4), [0])

    def test_subgrid_inside_c5_torus(self):
        # the d=2 box C_4 x C_5 inside C_5 x C_5: 20 vertices, boundary 10
        p = cartesian_product(cycle(5), cycle(5))
        box = [i * 5 + j for i in range(4) for j in range(5)]
        assert edge_boundary(p, box) == 10
        assert pp_upper_bound_from_witness(p, box) == 19

    def test_blownup_prefix_bound(self):
        # prefix classes of two blown-up paths multiply into a violating set
        from pathpair.constructions import blown_up_path

        a, b, k = 2, 2, 10
        g = blown_up_path(k, a).graph
        h = blown_up_path(k, b).graph
        prefix_g = list(range((2 * a * a + 1) * a))
        prefix_h = list(range((2 * b * b + 1) * b))
        p = cartesian_product(g, h)
        box = [x * h.n + y for x in prefix_g for y in prefix_h]
        bound = pp_upper_bound_from_witness(p, box)
        assert bound == (2 * a * a + 1) * a * (2 * b * b + 1) * b - 1
