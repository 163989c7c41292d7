import random

import pytest

from pathpair.matching import (
    BipartiteGraph,
    HallViolator,
    assign_with_capacities,
    max_matching,
    neighborhood,
    perfect_or_witness,
    replicate_right,
)

from oracles import brute_force_max_matching_size


def random_bipartite(rng, left_n, right_n, p=0.4):
    adj = [[r for r in range(right_n) if rng.random() < p] for _ in range(left_n)]
    return BipartiteGraph(left_n, right_n, adj)


def min_degree_bipartite(rng, n, extra=0.1):
    """Both-side minimum degree >= n/2: window rotations plus random noise."""
    half = (n + 1) // 2
    adj = []
    for u in range(n):
        row = {(u + off) % n for off in range(half)}
        row.update(r for r in range(n) if rng.random() < extra)
        adj.append(sorted(row))
    return BipartiteGraph(n, n, adj)


class TestMaxMatching:
    def test_complete_bipartite_perfect(self):
        b = BipartiteGraph(4, 4, [range(4)] * 4)
        m = max_matching(b)
        assert len(m) == 4
        assert len(set(m.values())) == 4

    def test_empty_adjacency_unmatched(self):
        b = BipartiteGraph(3, 3, [[0, 1, 2], [], [0]])
        m = max_matching(b)
        assert 1 not in m
        assert len(m) == 2

    def test_respects_adjacency_and_injective(self):
        rng = random.Random(3)
        for _ in range(100):
            b = random_bipartite(rng, rng.randint(0, 8), rng.randint(1, 8))
            m = max_matching(b)
            assert len(set(m.values())) == len(m)
            for u, r in m.items():
                assert r in b.adj[u]

    def test_agrees_with_brute_force(self):
        rng = random.Random(4)
        for _ in range(150):
            left = rng.randint(1, 8)
            right = rng.randint(1, 8)
            b = random_bipartite(rng, left, right, p=rng.uniform(0.1, 0.9))
            assert len(max_matching(b)) == brute_force_max_matching_size(b.adj, left, right)

    def test_deterministic(self):
        rng = random.Random(5)
        b = random_bipartite(rng, 20, 20)
        assert max_matching(b) == max_matching(b)


class TestPerfectOrWitness:
    def test_identity_adjacency(self):
        b = BipartiteGraph(3, 3, [[0], [1], [2]])
        result = perfect_or_witness(b)
        assert result == {0: 0, 1: 1, 2: 2}

    def test_shared_single_neighbor_violator(self):
        b = BipartiteGraph(2, 2, [[0], [0]])
        result = perfect_or_witness(b)
        assert isinstance(result, HallViolator)
        assert result.left_set == (0, 1)

    def test_requires_balanced_classes(self):
        with pytest.raises(ValueError):
            perfect_or_witness(BipartiteGraph(2, 3, [[0], [1]]))

    def test_violators_check_out(self):
        rng = random.Random(6)
        witnesses = 0
        for _ in range(200):
            n = rng.randint(2, 10)
            b = random_bipartite(rng, n, n, p=rng.uniform(0.05, 0.5))
            result = perfect_or_witness(b)
            if isinstance(result, HallViolator):
                witnesses += 1
                assert len(neighborhood(b, result.left_set)) < len(result.left_set)
            else:
                assert len(result) == n
        assert witnesses > 10  # the sweep actually exercised the witness branch

    def test_min_degree_half_always_perfect(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(2, 40)
            b = min_degree_bipartite(rng, n)
            result = perfect_or_witness(b)
            assert not isinstance(result, HallViolator)


class TestCapacitatedAssignment:
    def test_matches_replicated_formulation(self):
        rng = random.Random(8)
        for _ in range(80):
            left = rng.randint(1, 10)
            right = rng.randint(1, 4)
            cap = rng.randint(1, 3)
            adj = [sorted({rng.randrange(right) for _ in range(rng.randint(0, right))}) for _ in range(left)]
            assign = assign_with_capacities(adj, right, [cap] * right)
            expanded = replicate_right(adj, right, cap)
            assert sum(a is not None for a in assign) == len(max_matching(expanded))
            # capacity respected
            for r in range(right):
                assert sum(1 for a in assign if a == r) <= cap

    def test_saturates_when_obvious(self):
        assign = assign_with_capacities([[0], [0], [0]], 1, [3])
        assert assign == [0, 0, 0]

    def test_augments_through_displacement(self):
        # greedy puts both early lefts on column 0; the third forces a shuffle
        adj = [[0, 1], [0], [0]]
        assign = assign_with_capacities(adj, 2, [2, 1])
        assert sorted(a for a in assign if a is not None) == [0, 0, 1]
        assert assign[1] == 0 and assign[2] == 0
