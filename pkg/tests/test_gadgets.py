import pytest

from homfull.gadgets import (
    GadgetJ,
    NoGadgetFound,
    NotAcyclic,
    NotCograph,
    NotOclique,
    dagiso_gadget,
    derive_fig1_fixture,
    derive_gadget_J,
    embed_in_oclique,
    fullorient_gadget,
    gadget_j_invariants_hold,
    has_homfull_orientation,
    has_oclique_orientation,
    homfull_gadget,
    orient_gadget,
    quasi_transitive_orientation,
)
from homfull.graphs import (
    Graph,
    OrientedGraph,
    complete_graph,
    cycle_graph,
    directed_cycle,
    directed_path,
    path_graph,
    underlying,
)
from homfull.generate import bn_oclique
from homfull.isomorphism import are_isomorphic, check_vertex_map
from homfull.recognize import (
    is_hom_full_antisym,
    is_hom_full_oriented,
    is_oriented_clique,
    is_quasi_transitive,
    neighbourhood_comparable,
)


def test_embed_in_oclique_smallest():
    big, vm = embed_in_oclique(OrientedGraph(1))
    assert big.arcs == frozenset({(0, 1)})
    assert vm.mapping == (0,)


def test_embed_in_oclique_arcless_gives_plain_scaffold():
    big, _ = embed_in_oclique(OrientedGraph(3))
    assert big == bn_oclique(3)


def test_embed_in_oclique_directed_path():
    g = directed_path(4)
    big, vm = embed_in_oclique(g)
    assert big.n == 8
    assert is_oriented_clique(big)
    assert check_vertex_map(vm, g, big)


def test_dagiso_gadget_single_vertex():
    inst = dagiso_gadget(OrientedGraph(1))
    g = inst.output
    assert g.n == 5
    expected = {(0, 1), (0, 2), (0, 3), (0, 4), (2, 1), (3, 1), (4, 1),
                (2, 3), (3, 4), (4, 2)}
    assert g.arcs == frozenset(expected)
    assert inst.maps["L"] == (0,) and inst.maps["R"] == (1,)


def test_dagiso_gadget_rejects_cycles():
    with pytest.raises(NotAcyclic):
        dagiso_gadget(directed_cycle(3))


def test_dagiso_gadget_separates_nonisomorphic_dags():
    path = directed_path(3)
    star = OrientedGraph(3, frozenset({(0, 1), (0, 2)}))
    a = dagiso_gadget(path).output
    b = dagiso_gadget(star).output
    assert a.n == b.n == 13
    assert are_isomorphic(a, b) is None
    assert are_isomorphic(a, dagiso_gadget(path).output) is not None


def test_derived_gadget_passes_invariants():
    gadget = derive_gadget_J()
    assert gadget_j_invariants_hold(gadget)
    assert gadget.graph.n == 6  # no five-vertex candidate exists
    j = gadget.graph
    assert not neighbourhood_comparable(j, gadget.u, gadget.u_prime)
    assert is_hom_full_oriented(j)


def test_fig1_fixture_search_is_empty():
    derive_fig1_fixture.cache_clear()
    with pytest.raises(NoGadgetFound):
        derive_fig1_fixture()


def test_homfull_gadget_structure():
    gadget = derive_gadget_J()
    single = OrientedGraph(2, frozenset({(0, 1)}))
    inst = homfull_gadget(single, single, gadget=gadget)
    g = inst.output
    jn = gadget.graph.n
    assert g.n == 2 + 4 + 1 + jn
    q = inst.maps["q"][0]
    for x in range(jn):
        assert g.has_arc(q, x)
    for y in inst.maps["G1"] + inst.maps["G2"] + inst.maps["G2p"]:
        assert g.has_arc(y, q)
    for y1 in inst.maps["G1"]:
        assert g.has_arc(gadget.w, y1)
        for y2 in inst.maps["G2"]:
            assert g.has_arc(y1, y2)
    for y2 in inst.maps["G2"]:
        assert g.has_arc(gadget.v, y2)
        for y2p in inst.maps["G2p"]:
            assert g.has_arc(y2, y2p)
    for y2p in inst.maps["G2p"]:
        assert g.has_arc(gadget.u, y2p)
        for y1 in inst.maps["G1"]:
            assert g.has_arc(y2p, y1)


def test_homfull_gadget_requires_ocliques():
    with pytest.raises(NotOclique):
        homfull_gadget(directed_path(4), directed_path(3))


def test_homfull_gadget_biconditional_smallest():
    gadget = derive_gadget_J()
    one = OrientedGraph(1)
    inst = homfull_gadget(one, one, gadget=gadget)
    assert is_hom_full_oriented(inst.output, limit=inst.output.n)
    p3 = directed_path(3)
    arc = OrientedGraph(2, frozenset({(0, 1)}))
    inst = homfull_gadget(p3, arc, gadget=gadget)
    assert not is_hom_full_oriented(inst.output, limit=inst.output.n)


def test_fullorient_gadget_k3():
    inst = fullorient_gadget(complete_graph(3))
    assert inst.output.n == 8
    assert len(inst.output.edges) == 19
    assert inst.checks["claims_hold"]


def test_fullorient_gadget_records_failures_for_small_bases():
    inst = fullorient_gadget(Graph(2))
    assert not inst.checks["claims_hold"]
    assert inst.checks["comparable_pairs"]


def test_orient_gadget():
    for gamma in (complete_graph(1), complete_graph(3), cycle_graph(4)):
        oriented = has_oclique_orientation(gamma)
        assert oriented is not None
        out = orient_gadget(gamma, oriented)
        assert is_oriented_clique(out)
        assert out.n == 2 * gamma.n + 2


def test_orient_gadget_rejects_non_oclique_orientation():
    with pytest.raises(NotOclique):
        orient_gadget(path_graph(4), directed_path(4))


def test_has_oclique_orientation():
    assert has_oclique_orientation(complete_graph(4)) is not None
    assert has_oclique_orientation(path_graph(4)) is None  # diameter 3
    c4 = has_oclique_orientation(cycle_graph(4))
    assert c4 is not None and is_oriented_clique(c4)
    assert has_oclique_orientation(Graph(2)) is None  # disconnected


def test_has_homfull_orientation():
    found = has_homfull_orientation(path_graph(3))
    assert found is not None and is_hom_full_oriented(found, limit=3)
    two_k2 = Graph(4, frozenset({(0, 1), (2, 3)}))
    assert has_homfull_orientation(two_k2) is None
    # frozen by an exhaustive run over all eight orientations
    assert has_homfull_orientation(path_graph(4)) is None


def test_quasi_transitive_orientation():
    assert quasi_transitive_orientation(complete_graph(2)).arcs == frozenset({(0, 1)})
    p3 = quasi_transitive_orientation(path_graph(3))
    assert p3.arcs == frozenset({(0, 1), (2, 1)})
    with pytest.raises(NotCograph):
        quasi_transitive_orientation(path_graph(4))


def test_quasi_transitive_orientation_properties():
    from homfull.generate import homfull_graph_generator

    for seed in range(5):
        gamma = homfull_graph_generator(7, seed)
        oriented = quasi_transitive_orientation(gamma)
        assert underlying(oriented) == gamma
        assert is_quasi_transitive(oriented)
        assert is_hom_full_antisym(oriented)


def test_provenance_comments():
    inst = dagiso_gadget(OrientedGraph(1))
    lines = inst.provenance_comments()
    assert "construction dagiso" in lines
    assert any(line.startswith("map L 0 -> ") for line in lines)
