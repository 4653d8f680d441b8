"""Deterministic generators and enumerators for small graphs.

Everything that samples takes an explicit seed or ``random.Random`` so runs
are reproducible.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .graphs import EvenOrder, Graph, GraphError, OrientedGraph


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def all_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labelled graphs on n vertices."""
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if (mask >> i) & 1))


def all_oriented_graphs(n: int) -> Iterator[OrientedGraph]:
    """All 3^C(n,2) labelled oriented graphs on n vertices.

    Each vertex pair is independently absent, oriented forward, or oriented
    backward.
    """
    pairs = _pairs(n)
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield OrientedGraph(n, frozenset(arcs))


def orientations(gamma: Graph) -> Iterator[OrientedGraph]:
    """All 2^m orientations of a graph, in edge-direction bit-vector order."""
    edges = gamma.edge_list()
    for mask in range(1 << len(edges)):
        arcs = frozenset(
            (v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(edges)
        )
        yield OrientedGraph(gamma.n, arcs)


def random_orientation(gamma: Graph, rng: random.Random) -> OrientedGraph:
    arcs = frozenset(
        (v, u) if rng.random() < 0.5 else (u, v) for u, v in gamma.edge_list()
    )
    return OrientedGraph(gamma.n, arcs)


def random_oriented_graph(n: int, rng: random.Random) -> OrientedGraph:
    """Each pair independently absent, forward, or backward (uniform)."""
    arcs = []
    for u, v in _pairs(n):
        s = rng.randrange(3)
        if s == 1:
            arcs.append((u, v))
        elif s == 2:
            arcs.append((v, u))
    return OrientedGraph(n, frozenset(arcs))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = frozenset(pair for pair in _pairs(n) if rng.random() < p)
    return Graph(n, edges)


def random_dag(n: int, p: float, rng: random.Random) -> OrientedGraph:
    """Random DAG: each arc low index -> high index present with probability p."""
    arcs = frozenset(pair for pair in _pairs(n) if rng.random() < p)
    return OrientedGraph(n, arcs)


def regular_tournament(k: int) -> OrientedGraph:
    """Circulant regular tournament on k vertices: arc i->j iff (j-i) mod k
    lies in 1..(k-1)/2.  Every vertex has out-degree (k-1)/2.
    """
    if k < 1 or k % 2 == 0:
        raise EvenOrder(f"regular tournaments need odd order, got {k}")
    half = (k - 1) // 2
    arcs = frozenset(
        (i, (i + d) % k) for i in range(k) for d in range(1, half + 1)
    )
    return OrientedGraph(k, arcs)


def bn_oclique(n: int) -> OrientedGraph:
    """Oriented complete bipartite graph on sides a_0..a_{n-1}, b_0..b_{n-1}.

    The edge a_i b_j points from a_i to b_j when i <= j and from b_j to a_i
    otherwise.  The result is an oriented clique: vertices 0..n-1 are the
    a-side, n..2n-1 the b-side.
    """
    if n < 1:
        raise GraphError("need n >= 1")
    arcs = set()
    for i in range(n):
        for j in range(n):
            if i <= j:
                arcs.add((i, n + j))
            else:
                arcs.add((n + j, i))
    return OrientedGraph(2 * n, frozenset(arcs))


def random_forest_parents(n: int, rng: random.Random) -> list[int | None]:
    """Rooted forest on n nodes: node i picks a uniform parent among 0..i-1
    or becomes a new root."""
    parents: list[int | None] = []
    for i in range(n):
        choice = rng.randrange(i + 1)
        parents.append(None if choice == i else choice)
    return parents


def forest_comparability(parents: Sequence[int | None]) -> Graph:
    """Comparability graph of a rooted forest: edges join ancestor-descendant
    pairs."""
    n = len(parents)
    edges = set()
    for v in range(n):
        a = parents[v]
        while a is not None:
            edges.add((a, v) if a < v else (v, a))
            a = parents[a]
    return Graph(n, frozenset(edges))


def homfull_graph_generator(n: int, seed: int) -> Graph:
    """Seeded homomorphically full graph on n vertices.

    Samples a rooted forest, takes its ancestor-descendant comparability
    graph, and returns the complement.
    """
    if n < 1:
        raise GraphError("need n >= 1")
    rng = random.Random(seed)
    return forest_comparability(random_forest_parents(n, rng)).complement()
