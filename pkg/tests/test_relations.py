"""Edge relation, its closure classes, and their oracle cross-checks."""
from __future__ import annotations

import random

import pytest

from hamfactor import GraphError, NotMinimalError, theta_classes, theta_expression, theta_related

from corpus import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_minimal_graph,
    random_tree,
    triangle,
)
from oracles import theta_component_partition


class TestThetaRelated:
    def test_c4_opposite_edges_related(self):
        g = cycle_graph(4)
        assert theta_expression(g, (0, 1), (2, 3)) == 2
        assert theta_related(g, (0, 1), (2, 3))

    def test_c4_adjacent_edges_unrelated(self):
        g = cycle_graph(4)
        assert theta_expression(g, (0, 1), (1, 2)) == 0
        assert not theta_related(g, (0, 1), (1, 2))

    def test_reflexive(self):
        g = cycle_graph(4)
        for e in g.edge_pairs:
            assert theta_related(g, e, e)

    def test_orientation_independent(self):
        g = triangle(1, 1, 2)
        assert theta_related(g, (1, 0), (2, 0)) == theta_related(g, (0, 1), (0, 2))

    def test_edge_not_in_graph(self):
        g = path_graph(3)
        with pytest.raises(GraphError):
            theta_related(g, (0, 2), (0, 1))

    def test_symmetric_and_reflexive_on_small_graphs(self):
        rng = random.Random(5)
        for _ in range(12):
            g = random_minimal_graph(rng, rng.randint(2, 6), max_w=4)
            edges = g.edge_pairs
            if len(edges) > 20:
                continue
            for e in edges:
                assert theta_related(g, e, e)
                for f in edges:
                    assert theta_related(g, e, f) == theta_related(g, f, e)


class TestThetaClasses:
    def test_c4_two_opposite_pairs(self):
        cls = theta_classes(cycle_graph(4))
        assert cls.classes == (((0, 1), (2, 3)), ((0, 3), (1, 2)))
        assert cls.class_of[(1, 2)] == 1

    def test_k3_single_class(self):
        cls = theta_classes(complete_graph(3))
        assert len(cls) == 1
        assert cls.classes[0] == ((0, 1), (0, 2), (1, 2))

    def test_p3_two_singletons(self):
        cls = theta_classes(path_graph(3))
        assert cls.classes == (((0, 1),), ((1, 2),))

    def test_rejects_non_minimal(self):
        with pytest.raises(NotMinimalError):
            theta_classes(triangle(1, 1, 3))

    def test_classes_cover_and_are_disjoint(self):
        rng = random.Random(13)
        for _ in range(10):
            g = random_minimal_graph(rng, rng.randint(2, 7), max_w=3)
            cls = theta_classes(g)
            flattened = [e for c in cls.classes for e in c]
            assert sorted(flattened) == list(g.edge_pairs)
            assert len(set(flattened)) == len(flattened)

    def test_matches_component_oracle(self):
        rng = random.Random(31)
        for _ in range(15):
            g = random_minimal_graph(rng, rng.randint(2, 7), max_w=4)
            got = [sorted(c) for c in theta_classes(g).classes]
            assert got == theta_component_partition(g)

    def test_even_cycles_pair_opposite_edges(self):
        for k in (2, 3, 4, 5):
            g = cycle_graph(2 * k)
            cls = theta_classes(g)
            assert len(cls) == k
            for c in cls.classes:
                assert len(c) == 2

    def test_tree_classes_are_singletons(self):
        rng = random.Random(37)
        for _ in range(8):
            g = random_tree(rng, rng.randint(2, 10))
            cls = theta_classes(g)
            assert len(cls) == g.num_edges
            assert all(len(c) == 1 for c in cls.classes)

    def test_odd_cycle_single_class(self):
        assert len(theta_classes(cycle_graph(5))) == 1
        assert len(theta_classes(cycle_graph(7))) == 1
