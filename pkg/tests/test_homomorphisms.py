import pytest

from homfull.graphs import (
    Digraph,
    Graph,
    OrientedGraph,
    TooLarge,
    complete_graph,
    directed_cycle,
    directed_path,
    path_graph,
    transitive_tournament,
)
from homfull.homomorphisms import (
    block_respecting_embedding,
    complete_images,
    hom_exists,
    images_by_identification_closure,
    is_hom_full_by_definition,
    iter_partitions,
    minimum_image,
    oriented_core,
    quotient,
)
from homfull.isomorphism import are_isomorphic, canonical_form


def test_iter_partitions_blocks_are_independent():
    g = path_graph(3)
    for blocks in iter_partitions(g, "graph"):
        for block in blocks:
            for i, a in enumerate(block):
                for b in block[i + 1 :]:
                    assert not g.has_edge(a, b)


def test_partition_count_on_edgeless_graph():
    # every set partition of 4 elements is valid: Bell(4) = 15
    assert sum(1 for _ in iter_partitions(Graph(4), "graph")) == 15


def test_oriented_partitions_exclude_digon_quotients():
    dp3 = directed_path(3)
    parts = list(iter_partitions(dp3, "oriented"))
    assert parts == [((0,), (1,), (2,))]  # ends cannot merge
    parts = list(iter_partitions(dp3, "antisymmetric"))
    assert len(parts) == 2  # identity plus merging the ends


def test_complete_images_directed_path():
    only = complete_images(directed_path(3), "oriented")
    assert len(only) == 1 and are_isomorphic(only[0], directed_path(3))
    digr = complete_images(directed_path(3), "antisymmetric")
    assert len(digr) == 2
    digon = Digraph(2, frozenset({(0, 1), (1, 0)}))
    assert any(are_isomorphic(q, digon) for q in digr)


def test_complete_images_k2():
    images = complete_images(Graph(2, frozenset({(0, 1)})), "graph")
    assert len(images) == 1 and images[0].n == 2


def test_is_hom_full_by_definition():
    assert not is_hom_full_by_definition(directed_path(3), "antisymmetric")
    assert is_hom_full_by_definition(path_graph(3), "graph")
    assert is_hom_full_by_definition(directed_cycle(5), "oriented")
    with pytest.raises(TooLarge):
        is_hom_full_by_definition(Graph(11), "graph")


def test_hom_exists():
    assert hom_exists(directed_path(3), transitive_tournament(3)) is not None
    assert hom_exists(directed_cycle(3), directed_path(4)) is None
    g = directed_cycle(5)
    phi = hom_exists(g, g)
    assert phi is not None
    assert all((phi[a], phi[b]) in g.arcs for a, b in g.arcs)


def test_minimum_image():
    assert are_isomorphic(minimum_image(directed_path(3)), directed_path(3))
    assert minimum_image(OrientedGraph(4)).n == 1
    two_arcs = OrientedGraph(4, frozenset({(0, 1), (2, 3)}))
    small = minimum_image(two_arcs)
    assert small.n == 2 and len(small.arcs) == 1


def test_oriented_core():
    assert are_isomorphic(oriented_core(directed_path(3)), directed_path(3))
    assert oriented_core(OrientedGraph(1)).n == 1
    # a twin of the source retracts away
    tt3 = transitive_tournament(3)
    twin = OrientedGraph(4, frozenset(tt3.arcs | {(3, 1), (3, 2)}))
    core = oriented_core(twin)
    assert are_isomorphic(core, tt3)


def test_block_respecting_embedding():
    # merging the ends of an undirected 3-path embeds fixing the middle
    g = path_graph(3)
    blocks = ((0, 2), (1,))
    q = quotient(g, blocks, "graph")
    reps = block_respecting_embedding(g, blocks, q)
    assert reps is not None and reps[1] == 1 and reps[0] in (0, 2)


def test_images_by_identification_closure_matches_partitions():
    for g in (directed_path(4), OrientedGraph(3), directed_cycle(3)):
        via_seq = images_by_identification_closure(g)
        via_part = {canonical_form(q) for q in complete_images(g, "oriented")}
        assert via_seq == via_part
