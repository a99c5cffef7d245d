"""Degree-based topological indices, computed with exact Python integers."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph


class InvalidExponent(ValueError):
    def __init__(self, k: int):
        super().__init__(f"general first Zagreb exponent must be >= 2, got {k}")
        self.k = k


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    m1: int
    m2: int
    f: int
    hm: int
    rezm: int
    xi4: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def general_first_zagreb(g: Graph, k: int) -> int:
    """Sum of ``deg(v) ** k`` over all vertices."""
    if k < 2:
        raise InvalidExponent(k)
    return sum(d**k for d in g.degrees())


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def f_index_edge_form(g: Graph) -> int:
    d = g.degrees()
    return sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges)


def f_index(g: Graph, check: bool = False) -> int:
    """Forgotten index, the sum of cubed degrees.

    With ``check=True`` the edge form ``sum(d(u)^2 + d(v)^2)`` is computed
    as well and the two must agree.
    """
    value = sum(d**3 for d in g.degrees())
    if check:
        edge_value = f_index_edge_form(g)
        if edge_value != value:
            raise AssertionError(f"F-index vertex form {value} != edge form {edge_value}")
    return value


def second_zagreb(g: Graph) -> int:
    d = g.degrees()
    return sum(d[u] * d[v] for u, v in g.edges)


def hyper_zagreb(g: Graph) -> int:
    d = g.degrees()
    return sum((d[u] + d[v]) ** 2 for u, v in g.edges)


def redefined_zagreb(g: Graph) -> int:
    d = g.degrees()
    return sum(d[u] * d[v] * (d[u] + d[v]) for u, v in g.edges)


def report(g: Graph) -> InvariantReport:
    deg = g.degrees()
    m1 = f = xi4 = 0
    for d in deg:
        sq = d * d
        m1 += sq
        f += sq * d
        xi4 += sq * sq
    m2 = hm = rezm = f_edges = m1_edges = 0
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        m2 += a * b
        hm += (a + b) ** 2
        rezm += a * b * (a + b)
        f_edges += a * a + b * b
        m1_edges += a + b

    assert m1 == m1_edges == general_first_zagreb(g, 2)
    assert f == f_edges == general_first_zagreb(g, 3)
    assert hm == f + 2 * m2
    return InvariantReport(n=g.n, m=g.m, m1=m1, m2=m2, f=f, hm=hm, rezm=rezm, xi4=xi4)
