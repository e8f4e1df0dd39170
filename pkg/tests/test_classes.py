import random

import numpy as np
import pytest

import rdfsummarize as rs
from rdfsummarize.classes import UnionFind, create_classes
from rdfsummarize.similarity import CandidatePair, SimilarityMatrix


def matrix_from(scores):
    """scores: dict (u, v) -> s; returns (matrix, pairs)."""
    pair_nodes = sorted(scores)
    pairs = [CandidatePair(u, v, (0,), ((0,),), ((0,),))
             for u, v in pair_nodes]
    matrix = SimilarityMatrix(pair_nodes,
                              np.array([scores[k] for k in pair_nodes]))
    return matrix, pairs


class TestUnionFind:
    def test_union_and_find(self):
        uf = UnionFind(range(5))
        uf.union(0, 1)
        uf.union(3, 4)
        assert uf.find(0) == uf.find(1)
        assert uf.find(3) == uf.find(4)
        assert uf.find(2) not in (uf.find(0), uf.find(3))

    def test_groups_cover_universe(self):
        uf = UnionFind(range(6))
        uf.union(0, 5)
        uf.union(5, 2)
        groups = uf.groups()
        assert sorted(x for ms in groups.values() for x in ms) == list(range(6))


class TestCreateClasses:
    def test_epsilon_zero_keeps_singletons(self):
        matrix, pairs = matrix_from({(1, 2): 1.0, (2, 3): 1.0})
        cm = create_classes(matrix, pairs, 0.0)
        assert all(len(ms) == 1 for ms in cm.classes())

    def test_epsilon_one_merges_connected_components(self):
        matrix, pairs = matrix_from({(1, 2): 0.2, (2, 3): 0.2, (7, 8): 0.9})
        cm = create_classes(matrix, pairs, 1.0)
        assert sorted(cm.classes()) == [(1, 2, 3), (7, 8)]

    def test_transitive_merge_through_middle_node(self):
        matrix, pairs = matrix_from({(1, 2): 0.9, (2, 3): 0.9, (1, 3): 0.2})
        cm = create_classes(matrix, pairs, 0.3)
        assert cm.classes() == [(1, 2, 3)]

    def test_oracle_connected_components(self):
        rng = random.Random(11)
        for _ in range(20):
            scores = {}
            nodes = list(range(10))
            for i in nodes:
                for j in nodes[i + 1:]:
                    if rng.random() < 0.3:
                        scores[(i, j)] = rng.random()
            eps = rng.random()
            matrix, pairs = matrix_from(scores)
            cm = create_classes(matrix, pairs, eps, subjects=nodes)
            # breadth-first components over edges passing the guard
            adj = {n: set() for n in nodes}
            for (u, v), s in scores.items():
                if 1.0 - s < eps:
                    adj[u].add(v)
                    adj[v].add(u)
            seen, comps = set(), []
            for n in nodes:
                if n in seen:
                    continue
                stack, comp = [n], set()
                while stack:
                    x = stack.pop()
                    if x in comp:
                        continue
                    comp.add(x)
                    stack.extend(adj[x] - comp)
                seen |= comp
                comps.append(tuple(sorted(comp)))
            assert sorted(cm.classes()) == sorted(comps)

    def test_strict_inequality_guard(self):
        # dissimilarity exactly epsilon must NOT merge
        matrix, pairs = matrix_from({(1, 2): 0.7})
        cm = create_classes(matrix, pairs, 0.3)
        assert len(cm) == 2

    def test_unpaired_subjects_become_singletons(self):
        matrix, pairs = matrix_from({(1, 2): 0.95})
        cm = create_classes(matrix, pairs, 0.5, subjects=[1, 2, 9])
        assert (9,) in cm.classes()

    def test_epsilon_out_of_range(self):
        matrix, pairs = matrix_from({(1, 2): 0.5})
        with pytest.raises(ValueError):
            create_classes(matrix, pairs, 1.5)


class TestPartitionProperties:
    def _random_case(self, rng, n=12):
        scores = {}
        nodes = list(range(n))
        for i in nodes:
            for j in nodes[i + 1:]:
                if rng.random() < 0.4:
                    scores[(i, j)] = rng.random()
        return matrix_from(scores), nodes

    def test_order_independence_under_shuffles(self):
        rng = random.Random(5)
        (matrix, pairs), nodes = self._random_case(rng)
        want = create_classes(matrix, pairs, 0.6, subjects=nodes)
        for _ in range(50):
            shuffled = pairs[:]
            rng.shuffle(shuffled)
            assert create_classes(matrix, shuffled, 0.6, subjects=nodes) == want

    def test_monotone_refinement_in_epsilon(self):
        rng = random.Random(17)
        for _ in range(20):
            (matrix, pairs), nodes = self._random_case(rng)
            e1, e2 = sorted((rng.random(), rng.random()))
            fine = create_classes(matrix, pairs, e1, subjects=nodes)
            coarse = create_classes(matrix, pairs, e2, subjects=nodes)
            for ms in fine.classes():
                assert any(set(ms) <= set(delegate)
                           for delegate in coarse.classes())

    def test_partition_is_valid(self):
        rng = random.Random(23)
        (matrix, pairs), nodes = self._random_case(rng)
        cm = create_classes(matrix, pairs, 0.5, subjects=nodes)
        flat = [x for ms in cm.classes() for x in ms]
        assert sorted(flat) == sorted(nodes)
        for m in flat:
            assert m in cm.members[cm.class_of[m]]
