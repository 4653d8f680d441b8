"""Definition-level brute force: complete images, hom-fullness by definition,
homomorphism existence, minimum images, and cores.

Complete homomorphic images are enumerated as quotients by vertex partitions
into independent blocks.  For the oriented kind the quotient must also be
digon-free; the harness cross-checks that these partitions coincide with the
targets reachable by sequences of single identifications.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graphs import (
    AnyGraph,
    Digraph,
    Graph,
    KindMismatch,
    OrientedGraph,
    TooLarge,
    as_digraph,
    bits,
    exhaustive_bound,
    oriented_identify,
)
from .isomorphism import canonical_form, subgraph_embedding
from .recognize import Verdict, elementary_pairs

PARTITION_DEFAULT_LIMIT = 10
HOM_DEFAULT_LIMIT = 12

KINDS = ("graph", "oriented", "antisymmetric")

Blocks = tuple[tuple[int, ...], ...]


def _kind_for(g: AnyGraph, kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "graph" and not isinstance(g, Graph):
        raise KindMismatch("graph kind needs a Graph")
    if kind in ("oriented", "antisymmetric") and not isinstance(g, OrientedGraph):
        raise KindMismatch(f"{kind} kind needs an OrientedGraph")


def iter_partitions(g: AnyGraph, kind: str) -> Iterator[Blocks]:
    """Partitions of the vertex set into independent blocks.

    For the oriented kind, partitions whose quotient would contain a digon
    are pruned.  Blocks appear in order of their smallest member, so the
    enumeration order is deterministic.
    """
    _kind_for(g, kind)
    n = g.n
    adj = g.adj
    directed = not isinstance(g, Graph)
    digon_free = kind == "oriented"
    outs = g.out if directed else None

    blocks: list[list[int]] = []
    masks: list[int] = []
    outm: list[int] = []

    def place(v: int) -> Iterator[Blocks]:
        if v == n:
            yield tuple(tuple(b) for b in blocks)
            return
        bit = 1 << v
        for i, mask in enumerate(masks):
            if adj[v] & mask:
                continue
            if digon_free:
                new_out = outm[i] | outs[v]
                new_mask = mask | bit
                bad = False
                for j, other in enumerate(masks):
                    if j == i:
                        continue
                    if (new_out & other) and (outm[j] & new_mask):
                        bad = True
                        break
                if bad:
                    continue
                old_out = outm[i]
                outm[i] = new_out
            blocks[i].append(v)
            masks[i] = mask | bit
            yield from place(v + 1)
            blocks[i].pop()
            masks[i] = mask
            if digon_free:
                outm[i] = old_out
        ok_new = True
        if digon_free:
            for j, other in enumerate(masks):
                if (outs[v] & other) and (outm[j] & bit):
                    ok_new = False
                    break
        if ok_new:
            blocks.append([v])
            masks.append(bit)
            if digon_free:
                outm.append(outs[v])
            yield from place(v + 1)
            blocks.pop()
            masks.pop()
            if digon_free:
                outm.pop()

    yield from place(0)


def quotient(g: AnyGraph, blocks: Blocks, kind: str) -> AnyGraph:
    """Quotient of g by a partition into independent blocks."""
    _kind_for(g, kind)
    index = {}
    for i, block in enumerate(blocks):
        for v in block:
            index[v] = i
    if kind == "graph":
        edges = set()
        for u, v in g.edges:
            a, b = index[u], index[v]
            edges.add((a, b) if a < b else (b, a))
        return Graph(len(blocks), frozenset(edges))
    arcs = frozenset((index[a], index[b]) for a, b in g.arcs)
    if kind == "oriented":
        return OrientedGraph(len(blocks), arcs)
    return Digraph(len(blocks), arcs)


def complete_images(
    g: AnyGraph, kind: str, limit: int | None = None
) -> list[AnyGraph]:
    """All homomorphic images of g within the kind, deduplicated up to
    isomorphism and sorted by (order, canonical form)."""
    bound = exhaustive_bound(PARTITION_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"complete_images bound {bound} exceeded: n={g.n}")
    seen: dict[bytes, AnyGraph] = {}
    for blocks in iter_partitions(g, kind):
        q = quotient(g, blocks, kind)
        key = canonical_form(q)
        if key not in seen:
            seen[key] = q
    return [seen[k] for k in sorted(seen, key=lambda c: (c[1], c))]


def _embed_target(g: AnyGraph, kind: str) -> AnyGraph:
    return as_digraph(g) if kind == "antisymmetric" else g


def is_hom_full_by_definition(
    g: AnyGraph, kind: str, limit: int | None = None
) -> Verdict:
    """Every complete image embeds into g as a subgraph of the same kind.

    Antisymmetric images are digraphs (digons permitted), so they are tested
    against g reread as a digraph.  The witness of a negative answer is the
    first partition whose quotient does not embed.
    """
    bound = exhaustive_bound(PARTITION_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"is_hom_full_by_definition bound {bound} exceeded: n={g.n}")
    target = _embed_target(g, kind)
    checked: set[AnyGraph] = set()
    for blocks in iter_partitions(g, kind):
        if len(blocks) == g.n:
            continue
        q = quotient(g, blocks, kind)
        if q in checked:
            continue
        checked.add(q)
        if subgraph_embedding(q, target) is None:
            return Verdict(False, (blocks, q), "image does not embed")
    return Verdict(True, len(checked))


def block_respecting_embedding(
    g: AnyGraph, blocks: Blocks, q: AnyGraph
) -> Optional[tuple[int, ...]]:
    """Embedding of the quotient that picks a representative inside each block.

    Singleton blocks are forced to their own vertex, so a successful result
    fixes every unmerged vertex.  Returns the representative per block or
    None.
    """
    k = len(blocks)
    directed = not isinstance(g, Graph)
    reps = [0] * k

    def consistent(i: int, r: int) -> bool:
        for j in range(i):
            if directed:
                if q.has_arc(i, j) and not g.has_arc(r, reps[j]):
                    return False
                if q.has_arc(j, i) and not g.has_arc(reps[j], r):
                    return False
            elif q.has_edge(i, j) and not g.has_edge(r, reps[j]):
                return False
        return True

    def search(i: int) -> bool:
        if i == k:
            return True
        for r in blocks[i]:
            if consistent(i, r):
                reps[i] = r
                if search(i + 1):
                    return True
        return False

    return tuple(reps) if search(0) else None


def hom_exists(
    g: AnyGraph, h: AnyGraph, limit: int | None = None
) -> Optional[tuple[int, ...]]:
    """Any arc/edge-preserving (not necessarily injective) map g -> h, or None.

    Backtracking with forward pruning of per-vertex candidate sets.
    """
    if type(g) is not type(h):
        raise KindMismatch(f"{type(g).__name__} vs {type(h).__name__}")
    bound = exhaustive_bound(HOM_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"hom_exists bound {bound} exceeded: n={g.n}")
    if h.n == 0:
        return None if g.n else ()
    n = g.n
    full = (1 << h.n) - 1
    directed = not isinstance(g, Graph)
    mapping = [-1] * n

    def narrow(cand: list[int], s: int, t: int) -> bool:
        for j in range(s + 1, n):
            c = cand[j]
            if directed:
                if (g.out[s] >> j) & 1:
                    c &= h.out[t]
                if (g.inn[s] >> j) & 1:
                    c &= h.inn[t]
            elif (g.adj[s] >> j) & 1:
                c &= h.adj[t]
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
        return False

    if search(0, [full] * n):
        return tuple(mapping)
    return None


def minimum_image(g: OrientedGraph, limit: int | None = None) -> OrientedGraph:
    """Image with the fewest vertices among all oriented-kind quotients.

    Ties break by lexicographically least canonical form; the returned
    labelled representative is the first quotient realising that form in the
    deterministic partition order.
    """
    bound = exhaustive_bound(PARTITION_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"minimum_image bound {bound} exceeded: n={g.n}")
    best: tuple[int, bytes, OrientedGraph] | None = None
    for blocks in iter_partitions(g, "oriented"):
        k = len(blocks)
        if best is not None and k > best[0]:
            continue
        q = quotient(g, blocks, "oriented")
        key = canonical_form(q)
        if best is None or (k, key) < (best[0], best[1]):
            best = (k, key, q)
    assert best is not None
    return best[2]


def oriented_core(g: OrientedGraph, limit: int | None = None) -> OrientedGraph:
    """Minimum-order induced subgraph admitting a homomorphism from g.

    Deterministic: the lexicographically least vertex subset among the
    minimum-order solutions, relabelled to 0..k-1 in increasing order.
    """
    bound = exhaustive_bound(PARTITION_DEFAULT_LIMIT, limit)
    if g.n > bound:
        raise TooLarge(f"oriented_core bound {bound} exceeded: n={g.n}")
    from itertools import combinations

    for k in range(1, g.n + 1):
        for subset in combinations(range(g.n), k):
            candidate = g.induced(subset)
            if hom_exists(g, candidate, limit=max(bound, g.n)) is not None:
                return candidate
    raise AssertionError("unreachable: g maps onto itself")


def images_by_identification_closure(g: OrientedGraph) -> set[bytes]:
    """Canonical forms of all targets reachable from g by sequences of
    elementary identifications (used to validate the partition enumeration)."""
    start = canonical_form(g)
    seen = {start: g}
    frontier = [g]
    while frontier:
        current = frontier.pop()
        for u, v in elementary_pairs(current):
            nxt = oriented_identify(current, u, v)
            key = canonical_form(nxt)
            if key not in seen:
                seen[key] = nxt
                frontier.append(nxt)
    return set(seen)
