"""Graph file parsing and report serialization for the command line.

Two input formats:

  * edge list: one edge per line as two whitespace-separated non-negative
    integers, ``#`` starts a comment, blank lines are skipped; vertices are
    exactly those mentioned;
  * DIMACS: a ``p edge <n> <m>`` header, then ``m`` lines ``e <u> <v>``
    with 1-based endpoints; ``c`` lines are comments; vertices are 1..n.

Parsed graphs are simple: duplicate edges collapse with a warning and
self loops are rejected outright, since the solvers assume simple inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed graph input; message carries the offending line number."""


@dataclass(frozen=True)
class SimpleGraph:
    """An immutable simple undirected graph."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass
class ParseResult:
    graph: SimpleGraph
    order: tuple[int, ...]
    warnings: list[str] = field(default_factory=list)


def _finish(vertex_order, edge_set) -> SimpleGraph:
    return SimpleGraph(vertices=tuple(sorted(set(vertex_order))),
                       edges=tuple(sorted(edge_set)))


def parse_edgelist(text: str) -> ParseResult:
    seen_vertices: list[int] = []
    known: set[int] = set()
    edges: set[tuple[int, int]] = set()
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two endpoints, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {raw!r}")
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self loop at vertex {u} rejected")
        for x in (u, v):
            if x not in known:
                known.add(x)
                seen_vertices.append(x)
        e = (min(u, v), max(u, v))
        if e in edges:
            warnings.append(f"line {lineno}: duplicate edge {e} collapsed")
        edges.add(e)
    return ParseResult(graph=_finish(seen_vertices, edges),
                       order=tuple(seen_vertices), warnings=warnings)


def parse_dimacs(text: str) -> ParseResult:
    n = None
    m_declared = None
    edges: set[tuple[int, int]] = set()
    m_seen = 0
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: repeated problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer sizes in {raw!r}")
            if n < 0 or m_declared < 0:
                raise ParseError(f"line {lineno}: negative sizes")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before the problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoint in {raw!r}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: endpoint outside 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self loop at vertex {u} rejected")
            m_seen += 1
            e = (min(u, v), max(u, v))
            if e in edges:
                warnings.append(f"line {lineno}: duplicate edge {e} collapsed")
            edges.add(e)
        else:
            raise ParseError(f"line {lineno}: unrecognized line {raw!r}")
    if n is None:
        raise ParseError("missing 'p edge' problem line")
    if m_seen != m_declared:
        raise ParseError(
            f"edge count mismatch: header declares {m_declared}, found {m_seen}")
    order = tuple(range(1, n + 1))
    return ParseResult(graph=SimpleGraph(vertices=order, edges=tuple(sorted(edges))),
                       order=order, warnings=warnings)


def parse_graph(text: str, fmt: str) -> ParseResult:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ParseError(f"unknown format {fmt!r}")
