import random

import pytest

from homfull.generate import (
    all_graphs,
    all_oriented_graphs,
    bn_oclique,
    forest_comparability,
    homfull_graph_generator,
    orientations,
    random_dag,
    random_forest_parents,
    regular_tournament,
)
from homfull.graphs import EvenOrder, Graph, complete_graph, is_acyclic, path_graph, underlying
from homfull.recognize import is_hom_full_graph, is_oriented_clique


def test_enumeration_counts():
    assert sum(1 for _ in all_graphs(4)) == 2 ** 6
    assert sum(1 for _ in all_oriented_graphs(3)) == 3 ** 3
    assert sum(1 for _ in orientations(path_graph(4))) == 2 ** 3


def test_orientations_cover_the_graph():
    for o in orientations(complete_graph(3)):
        assert underlying(o) == complete_graph(3)


def test_regular_tournament():
    assert regular_tournament(1).n == 1
    c3 = regular_tournament(3)
    assert c3.arcs == frozenset({(0, 1), (1, 2), (2, 0)})
    t5 = regular_tournament(5)
    assert all(t5.out_degree(v) == 2 for v in range(5))
    assert len(t5.arcs) == 10
    with pytest.raises(EvenOrder):
        regular_tournament(4)
    with pytest.raises(EvenOrder):
        regular_tournament(0)


def test_bn_oclique():
    b1 = bn_oclique(1)
    assert b1.arcs == frozenset({(0, 1)})
    b2 = bn_oclique(2)
    assert b2.arcs == frozenset({(0, 2), (0, 3), (1, 3), (2, 1)})
    for n in (1, 2, 3, 4):
        assert is_oriented_clique(bn_oclique(n))


def test_random_dag_is_acyclic():
    rng = random.Random(7)
    for _ in range(25):
        assert is_acyclic(random_dag(6, 0.5, rng))


def test_forest_comparability():
    # chain of 3: every pair is ancestor-descendant
    assert forest_comparability([None, 0, 1]) == complete_graph(3)
    # two isolated roots: no comparable pairs
    assert forest_comparability([None, None]) == Graph(2)


def test_random_forest_parent_shape():
    rng = random.Random(0)
    parents = random_forest_parents(10, rng)
    assert len(parents) == 10
    assert all(p is None or p < i for i, p in enumerate(parents))


def test_generator_output_is_hom_full():
    for n in range(1, 9):
        for seed in range(6):
            assert is_hom_full_graph(homfull_graph_generator(n, seed))
