"""The subdivision-derived graphs S(G), R(G), Q(G) and T(G).

Original vertices keep their indices ``0..n-1``; the vertex inserted for
edge id ``e`` is ``n + e``.
"""

from __future__ import annotations

import enum
from functools import total_ordering
from itertools import combinations

from .graph import Edge, Graph, build_graph


@total_ordering
class DerivedKind(enum.Enum):
    S = "S"
    R = "R"
    Q = "Q"
    T = "T"

    @property
    def order(self) -> int:
        return "SRQT".index(self.value)

    def __lt__(self, other: "DerivedKind") -> bool:
        if not isinstance(other, DerivedKind):
            return NotImplemented
        return self.order < other.order

    def __str__(self) -> str:
        return self.value

    @property
    def keeps_original_edges(self) -> bool:
        return self in (DerivedKind.R, DerivedKind.T)

    @property
    def joins_adjacent_edges(self) -> bool:
        return self in (DerivedKind.Q, DerivedKind.T)


KINDS = tuple(DerivedKind)


def as_kind(kind: "DerivedKind | str") -> DerivedKind:
    return kind if isinstance(kind, DerivedKind) else DerivedKind(str(kind).upper())


def _derived_edges(g: Graph, kind: DerivedKind) -> list[Edge]:
    n = g.n
    edges: list[Edge] = []
    if kind.keeps_original_edges:
        edges.extend(g.edges)
    for e, (u, v) in enumerate(g.edges):
        edges.append((u, n + e))
        edges.append((n + e, v))
    if kind.joins_adjacent_edges:
        # Each pair of edges meets in at most one vertex, so no pair repeats.
        for incident in g.incident_edges():
            for e, f in combinations(incident, 2):
                edges.append((n + e, n + f))
    return edges


def derive(g: Graph, kind: "DerivedKind | str") -> Graph:
    kind = as_kind(kind)
    h = build_graph(g.n + g.m, _derived_edges(g, kind))
    _check_degrees(g, h, kind)
    return h


def _check_degrees(g: Graph, h: Graph, kind: DerivedKind) -> None:
    dg, dh = g.degrees(), h.degrees()
    scale = 2 if kind.keeps_original_edges else 1
    for u in range(g.n):
        assert dh[u] == scale * dg[u], (kind, u)
    for e, (u, v) in enumerate(g.edges):
        want = dg[u] + dg[v] if kind.joins_adjacent_edges else 2
        assert dh[g.n + e] == want, (kind, e)
