"""Text-format parsing and serialization, plus one-way DOT export.

Format: ``#`` starts a comment; the first non-comment line is ``graph N``,
``oriented N``, or ``digraph N``; each following line is ``e U V`` (graphs)
or ``a U V`` (directed kinds).  Indices are 0-based.  Duplicate lines,
loops, out-of-range ids, and digons in ``oriented`` files are parse errors.
The writer emits edges/arcs sorted lexicographically.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import IO, Iterable, Union

from .graphs import AnyGraph, Digraph, Graph, GraphError, OrientedGraph


class ParseError(GraphError):
    """Malformed input; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class LoopEdge(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class DigonInOriented(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


_HEADERS = {"graph": Graph, "oriented": OrientedGraph, "digraph": Digraph}


def parse(text: str) -> AnyGraph:
    """Parse one graph value from the text format."""
    kind = None
    n = 0
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    item = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if kind is None:
            if len(fields) != 2 or fields[0] not in _HEADERS:
                raise ParseError(
                    "expected header 'graph N', 'oriented N', or 'digraph N'", lineno
                )
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            kind = fields[0]
            item = "e" if kind == "graph" else "a"
            continue
        if len(fields) != 3 or fields[0] != item:
            raise ParseError(f"expected '{item} U V'", lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"bad vertex ids {fields[1]!r} {fields[2]!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"vertex id out of range: {u} {v} (n={n})", lineno)
        if u == v:
            raise LoopEdge(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v)) if kind == "graph" else (u, v)
        if key in seen:
            raise DuplicateEdge(f"duplicate {'edge' if kind == 'graph' else 'arc'} {u} {v}", lineno)
        if kind == "oriented" and (v, u) in seen:
            raise DigonInOriented(f"digon between {u} and {v}", lineno)
        seen.add(key)
        pairs.append((u, v))
    if kind is None:
        raise ParseError("empty input", 1)
    return _HEADERS[kind](n, frozenset(pairs))


def load(source: Union[str, Path, IO[str]]) -> AnyGraph:
    """Parse a graph from a path or an open text stream."""
    if isinstance(source, (str, Path)):
        return parse(Path(source).read_text())
    return parse(source.read())


def serialize(g: AnyGraph, comments: Iterable[str] = ()) -> str:
    """Render a graph in the text format, pairs sorted lexicographically."""
    out = io.StringIO()
    for comment in comments:
        out.write(f"# {comment}\n")
    if isinstance(g, Graph):
        out.write(f"graph {g.n}\n")
        for u, v in g.edge_list():
            out.write(f"e {u} {v}\n")
    else:
        out.write(f"{'oriented' if isinstance(g, OrientedGraph) else 'digraph'} {g.n}\n")
        for u, v in g.arc_list():
            out.write(f"a {u} {v}\n")
    return out.getvalue()


def save(g: AnyGraph, path: Union[str, Path], comments: Iterable[str] = ()) -> None:
    Path(path).write_text(serialize(g, comments))


def to_dot(g: AnyGraph, name: str = "g") -> str:
    """DOT rendering for debug visualisation (never parsed back)."""
    lines = []
    if isinstance(g, Graph):
        lines.append(f"graph {name} {{")
        for v in range(g.n):
            lines.append(f"  {v};")
        for u, v in g.edge_list():
            lines.append(f"  {u} -- {v};")
    else:
        lines.append(f"digraph {name} {{")
        for v in range(g.n):
            lines.append(f"  {v};")
        for u, v in g.arc_list():
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def encode_line(g: AnyGraph) -> str:
    """One-line encoding used inside machine-readable reports."""
    if isinstance(g, Graph):
        body = " ".join(f"{u}-{v}" for u, v in g.edge_list())
        return f"graph {g.n} {body}".rstrip()
    kind = "oriented" if isinstance(g, OrientedGraph) else "digraph"
    body = " ".join(f"{u}>{v}" for u, v in g.arc_list())
    return f"{kind} {g.n} {body}".rstrip()


def decode_line(line: str) -> AnyGraph:
    """Inverse of :func:`encode_line`."""
    fields = line.split()
    if len(fields) < 2 or fields[0] not in _HEADERS:
        raise ParseError(f"bad one-line encoding {line!r}", 1)
    n = int(fields[1])
    sep = "-" if fields[0] == "graph" else ">"
    pairs = []
    for token in fields[2:]:
        a, b = token.split(sep)
        pairs.append((int(a), int(b)))
    return _HEADERS[fields[0]](n, frozenset(pairs))
