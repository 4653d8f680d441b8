"""Immutable graph, oriented-graph, and digraph values plus structural operators.

Vertices are dense 0-based integers in ``range(n)``.  All three kinds are
irreflexive with no duplicate edges/arcs; :class:`OrientedGraph` additionally
forbids digons (directed 2-cycles), while :class:`Digraph` permits them.
Values are immutable after construction and every operator returns a fresh
value, so everything here is safe to share between threads.

Adjacency is kept both as a frozenset of pairs (the public face) and as
per-vertex integer bitmasks (the fast path used by the search modules).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

VertexId = int
Pair = tuple[int, int]


class GraphError(Exception):
    """Base class for errors raised by this package."""


class AdjacentPair(GraphError):
    """Identifying adjacent vertices would create a loop."""


class TwoDipath(GraphError):
    """Identifying the ends of a directed 2-path would create a digon."""


class EvenOrder(GraphError):
    """Regular tournaments require an odd number of vertices."""


class KindMismatch(GraphError):
    """The operation needs two values of the same graph kind."""


class TooLarge(GraphError):
    """Input exceeds the bound configured for an exhaustive search."""


def exhaustive_bound(default: int, override: int | None = None) -> int:
    """Resolve the effective bound for an exponential-time operation.

    An explicit ``override`` wins, then the ``HOMFULL_MAX_EXHAUSTIVE``
    environment variable, then the built-in default.
    """
    if override is not None:
        return override
    env = os.environ.get("HOMFULL_MAX_EXHAUSTIVE")
    if env is not None:
        return int(env)
    return default


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _norm_edge(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _check_pair(u: int, v: int, n: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex out of range: ({u}, {v}) with n={n}")
    if u == v:
        raise GraphError(f"loop at vertex {u}")


@dataclass(frozen=True)
class Graph:
    """Simple irreflexive undirected graph."""

    n: int
    edges: frozenset[Pair] = frozenset()
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        norm = set()
        for u, v in self.edges:
            _check_pair(u, v, self.n)
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        masks = [0] * self.n
        for u, v in norm:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(masks))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edge_list()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def edge_list(self) -> list[Pair]:
        return sorted(self.edges)

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, frozenset(edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled to 0..k-1 in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(keep), edges)


class _DirectedOps:
    """Shared helpers for the two directed kinds."""

    n: int
    arcs: frozenset[Pair]
    out: tuple[int, ...]
    inn: tuple[int, ...]
    adj: tuple[int, ...]

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.inn[v].bit_count()

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def out_neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.out[v]))

    def in_neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.inn[v]))

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def arc_list(self) -> list[Pair]:
        return sorted(self.arcs)

    def induced(self, vertices: Iterable[int]):
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        arcs = frozenset(
            (index[u], index[v]) for u, v in self.arcs if u in index and v in index
        )
        return type(self)(len(keep), arcs)

    def _init_masks(self) -> None:
        outs = [0] * self.n
        ins = [0] * self.n
        for u, v in self.arcs:
            outs[u] |= 1 << v
            ins[v] |= 1 << u
        object.__setattr__(self, "out", tuple(outs))
        object.__setattr__(self, "inn", tuple(ins))
        object.__setattr__(self, "adj", tuple(o | i for o, i in zip(outs, ins)))


@dataclass(frozen=True)
class OrientedGraph(_DirectedOps):
    """Irreflexive digraph with no digons (an orientation of a simple graph)."""

    n: int
    arcs: frozenset[Pair] = frozenset()
    out: tuple[int, ...] = field(init=False, repr=False, compare=False)
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        arcs = frozenset(self.arcs)
        for u, v in arcs:
            _check_pair(u, v, self.n)
            if (v, u) in arcs:
                raise GraphError(f"digon between {u} and {v}")
        object.__setattr__(self, "arcs", arcs)
        self._init_masks()

    def __repr__(self) -> str:
        return f"OrientedGraph({self.n}, {self.arc_list()})"


@dataclass(frozen=True)
class Digraph(_DirectedOps):
    """Irreflexive digraph in which digons are permitted."""

    n: int
    arcs: frozenset[Pair] = frozenset()
    out: tuple[int, ...] = field(init=False, repr=False, compare=False)
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        arcs = frozenset(self.arcs)
        for u, v in arcs:
            _check_pair(u, v, self.n)
        object.__setattr__(self, "arcs", arcs)
        self._init_masks()

    def __repr__(self) -> str:
        return f"Digraph({self.n}, {self.arc_list()})"


AnyGraph = Union[Graph, OrientedGraph, Digraph]
AnyDirected = Union[OrientedGraph, Digraph]


def underlying(g: AnyDirected) -> Graph:
    """Underlying simple graph: edge {u,v} iff (u,v) or (v,u) is an arc."""
    return Graph(g.n, frozenset(_norm_edge(u, v) for u, v in g.arcs))


def as_digraph(g: OrientedGraph) -> Digraph:
    """Reinterpret an oriented graph as a digraph (same arcs)."""
    return Digraph(g.n, g.arcs)


def _collapse(n: int, u: int, v: int) -> tuple[int, list[int]]:
    """Vertex relabelling that merges u and v.

    The merged vertex takes min(u, v)'s slot, ids strictly between keep their
    value, and ids above max(u, v) shift down by one.  Deterministic so that
    witnesses are reproducible.
    """
    lo, hi = (u, v) if u < v else (v, u)
    table = []
    for w in range(n):
        if w == lo or w == hi:
            table.append(lo)
        elif w > hi:
            table.append(w - 1)
        else:
            table.append(w)
    return n - 1, table


def identify(g: AnyGraph, u: int, v: int) -> AnyGraph:
    """Identify non-adjacent vertices u and v into a single vertex.

    Graphs stay graphs and digraphs stay digraphs; an oriented graph yields a
    digraph because the quotient may contain a digon.  Raises
    :class:`AdjacentPair` when u and v are adjacent.
    """
    if u == v:
        raise GraphError("cannot identify a vertex with itself")
    _check_pair(u, v, g.n)
    if isinstance(g, Graph):
        if g.has_edge(u, v):
            raise AdjacentPair(f"vertices {u} and {v} are adjacent")
        m, table = _collapse(g.n, u, v)
        return Graph(m, frozenset(_norm_edge(table[a], table[b]) for a, b in g.edges))
    if g.adjacent(u, v):
        raise AdjacentPair(f"vertices {u} and {v} are adjacent")
    m, table = _collapse(g.n, u, v)
    return Digraph(m, frozenset((table[a], table[b]) for a, b in g.arcs))


def oriented_identify(g: OrientedGraph, u: int, v: int) -> OrientedGraph:
    """Identify u and v inside the oriented-graph kind.

    Requires the pair to be non-adjacent and joined by no directed 2-path in
    either direction, so the quotient is digon-free.  Raises
    :class:`AdjacentPair` or :class:`TwoDipath` otherwise.
    """
    if u == v:
        raise GraphError("cannot identify a vertex with itself")
    _check_pair(u, v, g.n)
    if g.adjacent(u, v):
        raise AdjacentPair(f"vertices {u} and {v} are adjacent")
    if (g.out[u] & g.inn[v]) or (g.out[v] & g.inn[u]):
        raise TwoDipath(f"vertices {u} and {v} are ends of a directed 2-path")
    m, table = _collapse(g.n, u, v)
    return OrientedGraph(m, frozenset((table[a], table[b]) for a, b in g.arcs))


def closure(g: OrientedGraph) -> Graph:
    """Undirected closure: edge {u,v} iff u,v are at directed distance <= 2.

    Equivalently, u and v are adjacent in the underlying graph or some
    directed 2-path joins them in either direction.
    """
    edges = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (
                (g.adj[u] >> v) & 1
                or (g.out[u] & g.inn[v])
                or (g.out[v] & g.inn[u])
            ):
                edges.add((u, v))
    return Graph(g.n, frozenset(edges))


def directed_distance(g: AnyDirected, u: int, v: int) -> float:
    """Length of a shortest directed path from u to v (inf if unreachable)."""
    if u == v:
        return 0
    seen = 1 << u
    frontier = g.out[u]
    dist = 1
    target = 1 << v
    while frontier:
        if frontier & target:
            return dist
        seen |= frontier
        nxt = 0
        for w in bits(frontier):
            nxt |= g.out[w]
        frontier = nxt & ~seen
        dist += 1
    return float("inf")


def is_acyclic(g: AnyDirected) -> bool:
    """True when the digraph has no directed cycle (Kahn peeling)."""
    indeg = [g.in_degree(v) for v in range(g.n)]
    queue = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in bits(g.out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == g.n


def undirected_diameter(g: Graph) -> float:
    """Largest pairwise distance; inf when disconnected (n >= 2)."""
    worst: float = 0
    for s in range(g.n):
        seen = 1 << s
        frontier = g.adj[s]
        dist = 0
        while frontier & ~seen:
            frontier &= ~seen
            seen |= frontier
            dist += 1
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt
        if seen != (1 << g.n) - 1:
            return float("inf")
        worst = max(worst, dist)
    return worst


def relabel(g: AnyGraph, perm: "list[int] | tuple[int, ...]") -> AnyGraph:
    """Relabel vertices: old vertex v becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of range(n)")
    if isinstance(g, Graph):
        return Graph(g.n, frozenset(_norm_edge(perm[a], perm[b]) for a, b in g.edges))
    return type(g)(g.n, frozenset((perm[a], perm[b]) for a, b in g.arcs))


# Standard small graphs.

def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def directed_path(n: int) -> OrientedGraph:
    return OrientedGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> OrientedGraph:
    if n < 3:
        raise GraphError("directed cycles without digons need at least 3 vertices")
    return OrientedGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def transitive_tournament(n: int) -> OrientedGraph:
    return OrientedGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))
