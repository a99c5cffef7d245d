"""Closed-form F-index of the four F-products, and the path-by-path polynomials.

Every formula takes the :class:`InvariantReport` of each factor, so it can
be evaluated far beyond the sizes at which products can be built.
"""

from __future__ import annotations

import enum

from .derived import DerivedKind, as_kind
from .graph import InvalidFamilyParams
from .invariants import InvariantReport


class TheoremId(enum.Enum):
    T1_S = "T1"
    T2_R = "T2"
    T3_Q = "T3"
    T4_T_PRINTED = "T4-printed"
    T4_T_CORRECTED = "T4-corrected"

    @property
    def kind(self) -> DerivedKind:
        return DerivedKind(self.name[3])

    def __str__(self) -> str:
        return self.value


# Theorem checked against brute force for each product kind.
THEOREM_FOR_KIND = {
    DerivedKind.S: TheoremId.T1_S,
    DerivedKind.R: TheoremId.T2_R,
    DerivedKind.Q: TheoremId.T3_Q,
    DerivedKind.T: TheoremId.T4_T_CORRECTED,
}


def _t1(a: InvariantReport, b: InvariantReport) -> int:
    n1, m1, n2, m2 = a.n, a.m, b.n, b.m
    return (
        n2**4 * a.f
        + n1 * b.f
        + 6 * n2**2 * m2 * a.m1
        + 6 * n2 * m1 * b.m1
        + 8 * n2**4 * m1
    )


def _t2(a: InvariantReport, b: InvariantReport) -> int:
    n1, m1, n2, m2 = a.n, a.m, b.n, b.m
    return (
        8 * n2**4 * a.f
        + n1 * b.f
        + 24 * n2**2 * m2 * a.m1
        + 12 * n2 * m1 * b.m1
        + 8 * n2**4 * m1
    )


def _t3(a: InvariantReport, b: InvariantReport) -> int:
    n1, m1, n2, m2 = a.n, a.m, b.n, b.m
    return (
        n1 * b.f
        - n2**4 * a.f
        + 3 * n2**4 * a.rezm
        + 2 * n2**4 * a.hm
        + 6 * n2**2 * m2 * a.m1
        + 6 * n2 * m1 * b.m1
        + n2**4 * a.xi4
        - 4 * n2**4 * a.m2
    )


def _t4_corrected(a: InvariantReport, b: InvariantReport) -> int:
    # Sum of the four partial sums making up the T-product:
    #   fibres over original vertices   8 n2^2 m2 M1 + n1 F2 + 8 n2 m1 M1_2
    #   lifted original edges           4 n2^4 F + 2 n2 m1 M1_2 + 8 n2^2 m2 M1
    #   lifted incidence edges          the same + 2 n2^4 HM
    #   lifted edge-adjacency edges     n2^4 (xi4 - 2F - 4 M2 + 3 ReZM)
    n1, m1, n2, m2 = a.n, a.m, b.n, b.m
    return (
        n1 * b.f
        + 6 * n2**4 * a.f
        + 3 * n2**4 * a.rezm
        + 2 * n2**4 * a.hm
        + 24 * n2**2 * m2 * a.m1
        + 12 * n2 * m1 * b.m1
        + n2**4 * a.xi4
        - 4 * n2**4 * a.m2
    )


_FORMULAS = {
    TheoremId.T1_S: _t1,
    TheoremId.T2_R: _t2,
    TheoremId.T3_Q: _t3,
    # The printed statement of the T-product theorem repeats the Q one.
    TheoremId.T4_T_PRINTED: _t3,
    TheoremId.T4_T_CORRECTED: _t4_corrected,
}


def as_theorem(theorem: "TheoremId | str") -> TheoremId:
    if isinstance(theorem, TheoremId):
        return theorem
    for t in TheoremId:
        if theorem in (t.value, t.name):
            return t
    raise ValueError(f"unknown theorem {theorem!r}")


def closed_form(theorem: "TheoremId | str", r1: InvariantReport, r2: InvariantReport) -> int:
    value = _FORMULAS[as_theorem(theorem)](r1, r2)
    if value < 0:
        raise ArithmeticError(f"{theorem} evaluated to {value} < 0")
    return value


def example1_polynomial(op: "DerivedKind | str", n: int, m: int) -> int:
    """F-index of ``P_n[P_m]_F`` from the printed polynomials in ``n`` and ``m``.

    The Q and T polynomials are only right for ``n >= 3``; at ``n = 2`` they
    disagree with the direct count.
    """
    if n < 2 or m < 2:
        raise InvalidFamilyParams(f"path polynomials need n, m >= 2, got n={n}, m={m}")
    op = as_kind(op)
    if op is DerivedKind.S:
        return 16*n*m**4 - 22*m**4 + 24*n*m**3 - 36*m**3 + 12*m**2 - 28*n*m + 36*m - 14*n
    if op is DerivedKind.R:
        return (72*n*m**4 - 120*m**4 + 96*n*m**3 - 144*m**3 - 48*n*m**2 + 96*m**2 - 64*n*m
                + 72*m - 14*n)
    if op is DerivedKind.Q:
        return 72*n*m**4 - 152*m**4 + 24*n*m**3 - 36*m**3 + 12*m**2 - 28*n*m + 36*m - 14*n
    return (128*n*m**4 - 250*m**4 + 96*n*m**3 - 144*m**3 - 48*n*m**2 + 96*m**2 - 64*n*m
            + 72*m - 14*n)
