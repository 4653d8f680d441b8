"""Polynomial recognizers plus the elementary-quotient decision for oriented
graphs.

Every negative verdict carries a witness that can be re-checked directly:
an incomparable pair, a forbidden induced subgraph, an induced directed
2-path, or an elementary pair whose quotient does not embed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import (
    AdjacentPair,
    AnyDirected,
    AnyGraph,
    Graph,
    OrientedGraph,
    TooLarge,
    bits,
    exhaustive_bound,
    oriented_identify,
    underlying,
)
from .isomorphism import VertexMap, check_vertex_map, subgraph_embedding

ELEMENTARY_DEFAULT_LIMIT = 10


@dataclass(frozen=True)
class Verdict:
    """Boolean decision plus a checkable witness.

    ``witness`` documents why: for negative answers it names the violating
    pair/tuple; for positive embedding-style checks it holds the embeddings.
    """

    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _subset(a: int, b: int) -> bool:
    return a | b == b


def neighbourhood_comparable(g: AnyGraph, u: int, v: int) -> bool:
    """True when one vertex's neighbourhoods contain the other's.

    For graphs this is N(u) vs N(v).  For directed kinds both the out- and
    in-containments must point the same way.  The pair must be non-adjacent.
    """
    if isinstance(g, Graph):
        if g.has_edge(u, v):
            raise AdjacentPair(f"vertices {u} and {v} are adjacent")
        return _subset(g.adj[u], g.adj[v]) or _subset(g.adj[v], g.adj[u])
    if g.adjacent(u, v):
        raise AdjacentPair(f"vertices {u} and {v} are adjacent")
    return (_subset(g.out[u], g.out[v]) and _subset(g.inn[u], g.inn[v])) or (
        _subset(g.out[v], g.out[u]) and _subset(g.inn[v], g.inn[u])
    )


def is_hom_full_graph(gamma: Graph) -> Verdict:
    """Every non-adjacent pair neighbourhood comparable; witness otherwise."""
    for u in range(gamma.n):
        for v in range(u + 1, gamma.n):
            if gamma.has_edge(u, v):
                continue
            if not neighbourhood_comparable(gamma, u, v):
                return Verdict(False, (u, v), "incomparable non-adjacent pair")
    return Verdict(True)


def forbidden_subgraph_check(gamma: Graph) -> Verdict:
    """No induced 2K2 and no induced P4; witness is the offending 4-tuple."""
    n = gamma.n
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    quad = (a, b, c, d)
                    sub = [
                        (x, y)
                        for i, x in enumerate(quad)
                        for y in quad[i + 1 :]
                        if gamma.has_edge(x, y)
                    ]
                    if len(sub) == 2:
                        (p, q), (r, s) = sub
                        if len({p, q, r, s}) == 4:
                            return Verdict(False, quad, "induced 2K2")
                    elif len(sub) == 3:
                        degs = sorted(
                            sum(1 for e in sub if x in e) for x in quad
                        )
                        if degs == [1, 1, 2, 2]:
                            return Verdict(False, quad, "induced P4")
    return Verdict(True)


def is_quasi_transitive(d: AnyDirected) -> Verdict:
    """Complete adjacency between in- and out-neighbours of every vertex.

    A negative witness is the lexicographically least induced directed
    2-path (u, w, v).
    """
    for u in range(d.n):
        for w in bits(d.out[u]):
            missing = d.out[w] & ~d.adj[u] & ~(1 << u)
            if missing:
                v = (missing & -missing).bit_length() - 1
                return Verdict(False, (u, w, v), "induced directed 2-path")
    return Verdict(True)


def is_hom_full_antisym(d: OrientedGraph) -> Verdict:
    """Quasi-transitive with a homomorphically full underlying graph."""
    qt = is_quasi_transitive(d)
    if not qt:
        return qt
    return is_hom_full_graph(underlying(d))


def all_pairs_comparable(d: AnyDirected) -> Verdict:
    """Every non-adjacent pair neighbourhood comparable (directed sense)."""
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if d.adjacent(u, v):
                continue
            if not neighbourhood_comparable(d, u, v):
                return Verdict(False, (u, v), "incomparable non-adjacent pair")
    return Verdict(True)


def is_oriented_clique(g: OrientedGraph) -> Verdict:
    """Every non-adjacent pair at directed distance 2 (in some direction)."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] >> v) & 1:
                continue
            if not ((g.out[u] & g.inn[v]) or (g.out[v] & g.inn[u])):
                return Verdict(False, (u, v), "pair at directed distance > 2")
    return Verdict(True)


def elementary_pairs(g: OrientedGraph) -> list[tuple[int, int]]:
    """Unordered pairs that are non-adjacent and joined by no directed 2-path
    in either direction, in lexicographic order."""
    found = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] >> v) & 1:
                continue
            if (g.out[u] & g.inn[v]) or (g.out[v] & g.inn[u]):
                continue
            found.append((u, v))
    return found


def _comparable_embedding(g: OrientedGraph, u: int, v: int) -> Optional[VertexMap]:
    """Embedding of the (u,v)-quotient into g when the pair is comparable.

    With N+(a) <= N+(b) and N-(a) <= N-(b) the quotient is the graph with a
    deleted, so the merged vertex can be sent to b and everything else to
    itself.
    """
    if _subset(g.out[u], g.out[v]) and _subset(g.inn[u], g.inn[v]):
        keep = v
    elif _subset(g.out[v], g.out[u]) and _subset(g.inn[v], g.inn[u]):
        keep = u
    else:
        return None
    lo, hi = (u, v) if u < v else (v, u)
    image = []
    for new in range(g.n - 1):
        if new == lo:
            image.append(keep)
        elif new < hi:
            image.append(new)
        else:
            image.append(new + 1)
    return VertexMap(tuple(image), "subgraph")


def is_hom_full_oriented(g: OrientedGraph, limit: int | None = None) -> Verdict:
    """The quotient of every elementary pair embeds into g as a subgraph.

    A positive verdict stores one embedding per elementary pair; a negative
    one names the first failing pair.  Comparable pairs take the direct
    relabelling embedding, everything else runs the full search.
    """
    bound = exhaustive_bound(ELEMENTARY_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"is_hom_full_oriented bound {bound} exceeded: n={g.n}")
    embeddings: dict[tuple[int, int], VertexMap] = {}
    for u, v in elementary_pairs(g):
        quotient = oriented_identify(g, u, v)
        vm = _comparable_embedding(g, u, v)
        if vm is None or not check_vertex_map(vm, quotient, g):
            vm = subgraph_embedding(quotient, g)
        if vm is None:
            return Verdict(False, (u, v), "elementary quotient does not embed")
        embeddings[(u, v)] = vm
    return Verdict(True, embeddings)
