"""Plain-text edge lists.

::

    # comment
    n 4
    0 1
    1 2

The header ``n <vertex_count>`` comes first (after comments and blank
lines); each further line holds one edge as two 0-based vertex indices.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import DuplicateEdge, Graph, GraphError, build_graph


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class MissingHeader(EdgeListError):
    pass


class MalformedLine(EdgeListError):
    pass


def parse_edge_list(text: str | Iterable[str] | TextIO) -> Graph:
    lines = text.splitlines() if isinstance(text, str) else text
    n: int | None = None
    edges: list[tuple[int, int]] = []
    line_of: list[int] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise MissingHeader("expected header 'n <vertex_count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise MalformedLine(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise MalformedLine(f"negative vertex count {n}", lineno)
            continue
        if len(parts) != 2:
            raise MalformedLine(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"expected integers, got {line!r}", lineno) from None
        edges.append((u, v))
        line_of.append(lineno)
    if n is None:
        raise MissingHeader("expected header 'n <vertex_count>'")

    # Validate edge by edge so the error carries the offending line.
    for i in range(len(edges)):
        try:
            build_graph(n, edges[i : i + 1])
        except GraphError as exc:
            raise EdgeListError(str(exc), line_of[i]) from exc
    seen: dict[frozenset[int], int] = {}
    for (u, v), lineno in zip(edges, line_of):
        key = frozenset((u, v))
        if key in seen:
            raise EdgeListError(
                f"duplicate edge {u} {v} (first on line {seen[key]})", lineno
            ) from DuplicateEdge(u, v)
        seen[key] = lineno
    return build_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.canonical_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_edge_list(g))
