"""Simple undirected graphs on dense 0-based vertex indices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge {u} {v}")
        self.u, self.v = u, v


class IndexOutOfRange(GraphError):
    def __init__(self, u: int, n: int | None = None):
        msg = f"vertex index {u} out of range"
        if n is not None:
            msg += f" (vertex_count={n})"
        super().__init__(msg)
        self.u = u


class InvalidFamilyParams(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` keeps construction order; the position of an edge in that
    tuple is its edge id.  Use :func:`build_graph` rather than the
    constructor so that input is validated.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def canonical_edges(self) -> list[Edge]:
        return sorted((min(u, v), max(u, v)) for u, v in self.edges)

    def incident_edges(self) -> list[list[int]]:
        """Edge ids incident to each vertex, in edge-id order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edge_set() == other.edge_set()

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edge_set()))


def build_graph(vertex_count: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    if vertex_count < 0:
        raise GraphError(f"vertex_count must be nonnegative, got {vertex_count}")
    adj: list[set[int]] = [set() for _ in range(vertex_count)]
    edges: list[Edge] = []
    for pair in edge_pairs:
        u, v = (int(x) for x in pair)
        for w in (u, v):
            if not 0 <= w < vertex_count:
                raise IndexOutOfRange(w, vertex_count)
        if u == v:
            raise SelfLoop(u)
        if v in adj[u]:
            raise DuplicateEdge(u, v)
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    g = Graph(vertex_count, tuple(edges), tuple(frozenset(s) for s in adj))
    assert sum(g.degrees()) == 2 * g.m
    return g


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise IndexOutOfRange(v, g.vertex_count)
    return len(g.adjacency[v])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParams(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidFamilyParams(f"complete needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1."""
    if n < 2:
        raise InvalidFamilyParams(f"star needs n >= 2, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidFamilyParams(f"complete_bipartite needs a, b >= 1, got {a}, {b}")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
}


def gen_family(family: str, *params: int) -> Graph:
    try:
        make = FAMILIES[family]
    except KeyError:
        raise InvalidFamilyParams(f"unknown family {family!r}") from None
    arity = 2 if family == "complete_bipartite" else 1
    if len(params) != arity:
        raise InvalidFamilyParams(f"{family} takes {arity} parameter(s), got {len(params)}")
    return make(*params)


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        raise EmptyGraph("connectivity is undefined for the graph on 0 vertices")
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.vertex_count
