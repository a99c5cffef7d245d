"""Lexicographic product and the four F-products ``G1[G2]_F``.

Vertices of a product are numbered left-major: the pair (x, v) with
``x`` a vertex of the left factor and ``v`` a vertex of ``G2`` gets index
``x * n2 + v``.  For F-products the left factor is ``F(G1)``, so ``x`` is
either an original vertex ``u < n1`` or the inserted vertex ``n1 + e``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derived import DerivedKind, as_kind, derive
from .graph import Edge, EmptyGraph, Graph, build_graph


@dataclass(frozen=True)
class ProductVertex:
    """A vertex of an F-product.

    ``left`` is a vertex of ``G1`` when ``inserted`` is false, and an edge
    id of ``G1`` (naming the inserted vertex) when it is true.
    """

    inserted: bool
    left: int
    right: int

    def flat_index(self, n1: int, n2: int) -> int:
        rank = n1 + self.left if self.inserted else self.left
        return rank * n2 + self.right

    @classmethod
    def from_flat(cls, index: int, n1: int, n2: int) -> "ProductVertex":
        rank, right = divmod(index, n2)
        if rank < n1:
            return cls(False, rank, right)
        return cls(True, rank - n1, right)


def _require_nonempty(g1: Graph, g2: Graph) -> None:
    if g1.n == 0 or g2.n == 0:
        raise EmptyGraph("product factors must have at least one vertex")


def _fibre_edges(base: range, g2: Graph) -> list[Edge]:
    n2 = g2.n
    return [(x * n2 + a, x * n2 + b) for x in base for a, b in g2.edges]


def _lifted_edges(left_edges, n2: int) -> list[Edge]:
    return [(x * n2 + a, y * n2 + b) for x, y in left_edges for a in range(n2) for b in range(n2)]


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    _require_nonempty(g1, g2)
    n2 = g2.n
    prod = build_graph(g1.n * n2, _fibre_edges(range(g1.n), g2) + _lifted_edges(g1.edges, n2))
    d1, d2, dp = g1.degrees(), g2.degrees(), prod.degrees()
    for u in range(g1.n):
        for v in range(n2):
            assert dp[u * n2 + v] == n2 * d1[u] + d2[v]
    return prod


def f_product(g1: Graph, g2: Graph, kind: "DerivedKind | str") -> Graph:
    """``G1[G2]_F`` built directly from the adjacency rule.

    (x, v1) ~ (y, v2) iff x = y is an original vertex of G1 and v1 ~ v2 in
    G2, or x ~ y in F(G1).
    """
    _require_nonempty(g1, g2)
    left = derive(g1, kind)
    n2 = g2.n
    prod = build_graph(left.n * n2, _fibre_edges(range(g1.n), g2) + _lifted_edges(left.edges, n2))
    _check_product(g1, g2, left, prod)
    return prod


def f_product_subtractive(g1: Graph, g2: Graph, kind: "DerivedKind | str") -> Graph:
    """``F(G1)[G2]`` with the G2-fibres over inserted vertices deleted."""
    _require_nonempty(g1, g2)
    full = lexicographic(derive(g1, kind), g2)
    n2 = g2.n
    removed = {frozenset(e) for e in _fibre_edges(range(g1.n, g1.n + g1.m), g2)}
    return build_graph(full.n, [e for e in full.edges if frozenset(e) not in removed])


def _check_product(g1: Graph, g2: Graph, left: Graph, prod: Graph) -> None:
    n1, n2 = g1.n, g2.n
    assert prod.n == (n1 + g1.m) * n2
    assert prod.m == n1 * g2.m + left.m * n2 * n2
    dl, d2, dp = left.degrees(), g2.degrees(), prod.degrees()
    for x in range(left.n):
        for v in range(n2):
            want = n2 * dl[x] + (d2[v] if x < n1 else 0)
            assert dp[x * n2 + v] == want
