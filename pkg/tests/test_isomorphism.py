import random

import pytest

from homfull.generate import all_graphs, all_oriented_graphs, random_oriented_graph
from homfull.graphs import (
    Digraph,
    Graph,
    KindMismatch,
    OrientedGraph,
    TooLarge,
    complete_graph,
    cycle_graph,
    directed_cycle,
    directed_path,
    path_graph,
    relabel,
    transitive_tournament,
)
from homfull.isomorphism import (
    are_isomorphic,
    canonical_form,
    check_vertex_map,
    induced_embedding,
    subgraph_embedding,
)


def test_are_isomorphic_finds_relabelling():
    g = directed_path(3)
    h = OrientedGraph(3, frozenset({(2, 0), (0, 1)}))  # path 2 -> 0 -> 1
    vm = are_isomorphic(g, h)
    assert vm is not None and check_vertex_map(vm, g, h)


def test_are_isomorphic_rejects():
    out_star = OrientedGraph(3, frozenset({(0, 1), (0, 2)}))
    assert are_isomorphic(directed_path(3), out_star) is None
    digon = Digraph(2, frozenset({(0, 1), (1, 0)}))
    single = Digraph(2, frozenset({(0, 1)}))
    assert are_isomorphic(digon, single) is None


def test_are_isomorphic_kind_mismatch():
    with pytest.raises(KindMismatch):
        are_isomorphic(path_graph(2), directed_path(2))


def test_are_isomorphic_is_symmetric_with_invertible_witness():
    rng = random.Random(5)
    for _ in range(20):
        g = random_oriented_graph(5, rng)
        perm = list(range(5))
        rng.shuffle(perm)
        h = relabel(g, perm)
        vm = are_isomorphic(g, h)
        assert vm is not None and check_vertex_map(vm, g, h)
        back = are_isomorphic(h, g)
        assert back is not None and check_vertex_map(back, h, g)


def test_subgraph_embedding():
    assert subgraph_embedding(Graph(2, frozenset({(0, 1)})), path_graph(3)) is not None
    digon = Digraph(2, frozenset({(0, 1), (1, 0)}))
    dp3 = Digraph(3, frozenset({(0, 1), (1, 2)}))
    assert subgraph_embedding(digon, dp3) is None
    assert subgraph_embedding(directed_cycle(3), directed_path(4)) is None


def test_induced_embedding():
    assert induced_embedding(path_graph(3), path_graph(4)) is not None
    assert induced_embedding(Graph(2, frozenset({(0, 1)})), complete_graph(3)) is not None
    assert induced_embedding(Graph(2), complete_graph(3)) is None
    assert induced_embedding(path_graph(4), cycle_graph(5)) is not None


def test_induced_vs_subgraph():
    # any induced embedding is in particular a subgraph embedding
    rng = random.Random(11)
    for _ in range(30):
        h = random_oriented_graph(3, rng)
        g = random_oriented_graph(5, rng)
        if induced_embedding(h, g) is not None:
            assert subgraph_embedding(h, g) is not None


def test_embedding_witnesses_verify():
    vm = subgraph_embedding(directed_path(3), transitive_tournament(4))
    assert vm is not None and check_vertex_map(vm, directed_path(3), transitive_tournament(4))
    vm = induced_embedding(path_graph(3), path_graph(5))
    assert vm is not None and check_vertex_map(vm, path_graph(3), path_graph(5))


def test_canonical_form_basics():
    g = directed_path(3)
    rev = OrientedGraph(3, frozenset({(2, 1), (1, 0)}))
    assert canonical_form(g) == canonical_form(rev)
    assert canonical_form(directed_cycle(3)) != canonical_form(transitive_tournament(3))
    rng = random.Random(3)
    for _ in range(10):
        h = random_oriented_graph(6, rng)
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_form(h) == canonical_form(relabel(h, perm))


def test_canonical_form_too_large():
    with pytest.raises(TooLarge):
        canonical_form(Graph(11))


def test_canonical_agrees_with_search_exhaustively():
    for n in (2, 3):
        graphs = list(all_oriented_graphs(n))
        forms = [canonical_form(g) for g in graphs]
        for i, g in enumerate(graphs):
            for j in range(i + 1, len(graphs)):
                same = forms[i] == forms[j]
                assert same == (are_isomorphic(g, graphs[j]) is not None)
    graphs = list(all_graphs(4))
    forms = [canonical_form(g) for g in graphs]
    rng = random.Random(1)
    for _ in range(300):
        i, j = rng.randrange(len(graphs)), rng.randrange(len(graphs))
        assert (forms[i] == forms[j]) == (are_isomorphic(graphs[i], graphs[j]) is not None)


def test_deterministic_witness():
    g = directed_cycle(5)
    h = relabel(g, [4, 3, 2, 1, 0])
    assert are_isomorphic(g, h).mapping == are_isomorphic(g, h).mapping
    first = subgraph_embedding(directed_path(2), transitive_tournament(3))
    assert first.mapping == (0, 1)  # lexicographically least
