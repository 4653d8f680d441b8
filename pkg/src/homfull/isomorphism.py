"""Brute-force isomorphism, embedding, and canonical-form services.

All searches are pruned backtracking over vertex bitmasks.  They are exact,
deterministic (the witness returned is the lexicographically least one in
search order), and sized for desk-scale inputs; candidate pruning uses only
degree signatures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    AnyGraph,
    Digraph,
    Graph,
    KindMismatch,
    OrientedGraph,
    TooLarge,
    exhaustive_bound,
)

CANONICAL_DEFAULT_LIMIT = 10

CanonicalForm = bytes


@dataclass(frozen=True)
class VertexMap:
    """Injective vertex mapping witnessing an isomorphism or embedding.

    ``mapping[i]`` is the codomain vertex assigned to domain vertex ``i``.
    ``kind`` is one of ``"isomorphism"``, ``"subgraph"``, ``"induced"``.
    """

    mapping: tuple[int, ...]
    kind: str

    def __iter__(self):
        return iter(self.mapping)

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.mapping))


def _require_same_kind(g: AnyGraph, h: AnyGraph) -> None:
    if type(g) is not type(h):
        raise KindMismatch(f"{type(g).__name__} vs {type(h).__name__}")


def check_vertex_map(vm: VertexMap, source: AnyGraph, target: AnyGraph) -> bool:
    """Re-verify a witness by direct definition, independent of the search.

    Uses membership tests on the pair sets rather than the adjacency masks.
    """
    if type(source) is not type(target):
        return False
    m = vm.mapping
    if len(m) != source.n or len(set(m)) != len(m):
        return False
    if any(not 0 <= x < target.n for x in m):
        return False
    directed = not isinstance(source, Graph)
    spairs = source.arcs if directed else source.edges
    tpairs = target.arcs if directed else target.edges

    def present(x: int, y: int) -> bool:
        return (x, y) in tpairs if directed else ((x, y) in tpairs or (y, x) in tpairs)

    for a, b in spairs:
        if not present(m[a], m[b]):
            return False
    if vm.kind == "subgraph":
        return True
    # Induced and isomorphism also forbid extra adjacencies among the image.
    for i in range(source.n):
        for j in range(source.n):
            if i == j:
                continue
            if directed:
                if (i, j) not in spairs and (m[i], m[j]) in tpairs:
                    return False
            elif i < j:
                if not present(i, j) and present(m[i], m[j]):
                    return False
    if vm.kind == "isomorphism":
        if source.n != target.n or len(spairs) != len(tpairs):
            return False
    return True


def _signatures(g: AnyGraph) -> list[tuple[int, ...]]:
    if isinstance(g, Graph):
        return [(g.degree(v),) for v in range(g.n)]
    return [(g.out_degree(v), g.in_degree(v)) for v in range(g.n)]


def are_isomorphic(g: AnyGraph, h: AnyGraph) -> Optional[VertexMap]:
    """Bijection preserving arcs/edges both ways, or None.

    Deterministic: the first witness in lexicographic search order is
    returned.  Raises :class:`KindMismatch` for different kinds.
    """
    _require_same_kind(g, h)
    if g.n != h.n:
        return None
    directed = not isinstance(g, Graph)
    if directed:
        if len(g.arcs) != len(h.arcs):
            return None
    elif len(g.edges) != len(h.edges):
        return None
    sg, sh = _signatures(g), _signatures(h)
    if sorted(sg) != sorted(sh):
        return None
    n = g.n
    candidates = [
        sum(1 << t for t in range(n) if sh[t] == sg[s]) for s in range(n)
    ]
    mapping = [-1] * n
    used = 0

    if directed:
        gout, ginn = g.out, g.inn
        hout, hinn = h.out, h.inn

        def ok(s: int, t: int) -> bool:
            for j in range(s):
                mj = mapping[j]
                if ((gout[s] >> j) & 1) != ((hout[t] >> mj) & 1):
                    return False
                if ((ginn[s] >> j) & 1) != ((hinn[t] >> mj) & 1):
                    return False
            return True

    else:
        gadj, hadj = g.adj, h.adj

        def ok(s: int, t: int) -> bool:
            for j in range(s):
                if ((gadj[s] >> j) & 1) != ((hadj[t] >> mapping[j]) & 1):
                    return False
            return True

    def search(s: int) -> bool:
        nonlocal used
        if s == n:
            return True
        avail = candidates[s] & ~used
        while avail:
            low = avail & -avail
            t = low.bit_length() - 1
            avail ^= low
            if ok(s, t):
                mapping[s] = t
                used |= low
                if search(s + 1):
                    return True
                used ^= low
        mapping[s] = -1
        return False

    if search(0):
        return VertexMap(tuple(mapping), "isomorphism")
    return None


def _embed(pattern: AnyGraph, target: AnyGraph, induced: bool) -> Optional[VertexMap]:
    _require_same_kind(pattern, target)
    if pattern.n > target.n:
        return None
    directed = not isinstance(pattern, Graph)
    if directed:
        if len(pattern.arcs) > len(target.arcs):
            return None
    elif len(pattern.edges) > len(target.edges):
        return None
    n, tn = pattern.n, target.n
    full = (1 << tn) - 1
    sp, st = _signatures(pattern), _signatures(target)
    # Degree dominance holds for induced embeddings too: image vertices may
    # have extra neighbours outside the image.
    init = [
        sum(1 << t for t in range(tn) if all(a <= b for a, b in zip(sp[s], st[t])))
        for s in range(n)
    ]
    if any(c == 0 for c in init):
        return None
    mapping = [-1] * n

    if directed:
        pout, pinn = pattern.out, pattern.inn
        tout, tinn = target.out, target.inn

        def narrow(cand: list[int], s: int, t: int) -> bool:
            for j in range(s + 1, n):
                c = cand[j] & ~(1 << t)
                if (pout[s] >> j) & 1:
                    c &= tout[t]
                elif induced:
                    c &= full & ~tout[t]
                if (pinn[s] >> j) & 1:
                    c &= tinn[t]
                elif induced:
                    c &= full & ~tinn[t]
                if not c:
                    return False
                cand[j] = c
            return True

    else:
        padj = pattern.adj
        tadj = target.adj

        def narrow(cand: list[int], s: int, t: int) -> bool:
            for j in range(s + 1, n):
                c = cand[j] & ~(1 << t)
                if (padj[s] >> j) & 1:
                    c &= tadj[t]
                elif induced:
                    c &= full & ~tadj[t]
                if not c:
                    return False
                cand[j] = c
            return True

    def search(s: int, cand: list[int]) -> bool:
        if s == n:
            return True
        avail = cand[s]
        while avail:
            low = avail & -avail
            t = low.bit_length() - 1
            avail ^= low
            nxt = cand.copy()
            if narrow(nxt, s, t):
                mapping[s] = t
                if search(s + 1, nxt):
                    return True
        mapping[s] = -1
        return False

    if search(0, init):
        return VertexMap(tuple(mapping), "induced" if induced else "subgraph")
    return None


def subgraph_embedding(pattern: AnyGraph, target: AnyGraph) -> Optional[VertexMap]:
    """Injective map sending every arc/edge of the pattern onto one of the
    target; extra adjacencies among the image are allowed."""
    return _embed(pattern, target, induced=False)


def induced_embedding(pattern: AnyGraph, target: AnyGraph) -> Optional[VertexMap]:
    """Injective map preserving both adjacency and non-adjacency."""
    return _embed(pattern, target, induced=True)


def canonical_form(g: AnyGraph, limit: int | None = None) -> CanonicalForm:
    """Canonical byte string identifying the isomorphism class.

    Exact minimum adjacency encoding over all vertex relabellings that keep
    degree classes together (the minimum over all permutations is attained by
    one of these).  Factorial-time; guarded by a vertex-count bound.
    """
    bound = exhaustive_bound(CANONICAL_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"canonical_form bound {bound} exceeded: n={g.n}")
    n = g.n
    directed = not isinstance(g, Graph)
    kind_tag = {Graph: 0, OrientedGraph: 1, Digraph: 2}[type(g)]
    pair_count = len(g.arcs) if directed else len(g.edges)
    if pair_count == 0:
        return bytes([kind_tag, n]) + (b"\x00" * ((n * n + 7) // 8) if n else b"")
    sig = _signatures(g)
    classes: dict[tuple[int, ...], list[int]] = {}
    for v in range(n):
        classes.setdefault(sig[v], []).append(v)
    ordered = sorted(classes.items())
    slots: list[list[int]] = []
    base = 0
    for _, members in ordered:
        slots.append(list(range(base, base + len(members))))
        base += len(members)
    pairs = g.arcs if directed else g.edges

    best: int | None = None
    perm = [0] * n
    for placements in itertools.product(*(itertools.permutations(s) for s in slots)):
        for (_, members), placed in zip(ordered, placements):
            for v, slot in zip(members, placed):
                perm[v] = slot
        code = 0
        if directed:
            for a, b in pairs:
                code |= 1 << (perm[a] * n + perm[b])
        else:
            for a, b in pairs:
                x, y = perm[a], perm[b]
                if x > y:
                    x, y = y, x
                code |= 1 << (x * n + y)
        if best is None or code < best:
            best = code
    kind_tag = {Graph: 0, OrientedGraph: 1, Digraph: 2}[type(g)]
    width = (n * n + 7) // 8
    body = (best or 0).to_bytes(width, "big") if n else b""
    return bytes([kind_tag, n]) + body
