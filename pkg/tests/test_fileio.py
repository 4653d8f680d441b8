import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homfull.fileio import (
    DigonInOriented,
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    ParseError,
    decode_line,
    encode_line,
    parse,
    serialize,
    to_dot,
)
from homfull.generate import random_graph, random_oriented_graph
from homfull.graphs import Digraph, Graph, OrientedGraph, directed_path


def test_parse_oriented():
    g = parse("oriented 3\na 0 1\na 1 2\n")
    assert g == directed_path(3)


def test_parse_comments_and_blanks():
    g = parse("# header comment\n\ngraph 2  # inline\ne 0 1\n")
    assert g == Graph(2, frozenset({(0, 1)}))


def test_parse_digraph_allows_digons():
    g = parse("digraph 2\na 0 1\na 1 0\n")
    assert isinstance(g, Digraph) and len(g.arcs) == 2


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("oriented 2\na 0 1\na 1 0\n", DigonInOriented, 3),
        ("graph 2\ne 0 0\n", LoopEdge, 2),
        ("graph 2\ne 0 1\ne 1 0\n", DuplicateEdge, 3),
        ("oriented 2\na 0 1\na 0 1\n", DuplicateEdge, 3),
        ("graph 2\ne 0 7\n", IndexOutOfRange, 2),
        ("mesh 2\n", ParseError, 1),
        ("graph two\n", ParseError, 1),
        ("graph 2\nx 0 1\n", ParseError, 2),
        ("graph 2\na 0 1\n", ParseError, 2),
        ("", ParseError, 1),
    ],
)
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse(text)
    assert info.value.line == line


def test_serialize_sorted():
    g = OrientedGraph(3, frozenset({(2, 0), (0, 1)}))
    assert serialize(g) == "oriented 3\na 0 1\na 2 0\n"
    assert serialize(g, ["note"]).startswith("# note\n")


@given(st.integers(0, 8), st.randoms())
@settings(max_examples=40, deadline=None)
def test_round_trip_oriented(n, rng):
    g = random_oriented_graph(n, rng) if n else OrientedGraph(0)
    assert parse(serialize(g)) == g


@given(st.integers(0, 8), st.randoms())
@settings(max_examples=40, deadline=None)
def test_round_trip_graph(n, rng):
    g = random_graph(n, 0.5, rng) if n else Graph(0)
    assert parse(serialize(g)) == g


def test_encode_decode_line():
    for g in (directed_path(3), Graph(3, frozenset({(0, 2)})), Digraph(2, frozenset({(0, 1), (1, 0)}))):
        assert decode_line(encode_line(g)) == g


def test_to_dot():
    dot = to_dot(directed_path(2))
    assert "digraph" in dot and "0 -> 1;" in dot
    dot = to_dot(Graph(2, frozenset({(0, 1)})))
    assert dot.startswith("graph") and "0 -- 1;" in dot
