"""Acceptance criteria, one test per criterion.

All comparisons are exact integer equality.  Each test records a
PASS/FAIL line that is printed at the end of the pytest run; running
this file directly prints the same lines.
"""

import random
import time

import pytest

from findex import (
    KINDS,
    THEOREM_FOR_KIND,
    TheoremId,
    build_graph,
    closed_form,
    derive,
    enumerate_connected,
    example1_polynomial,
    f_index,
    f_product,
    gen_family,
    general_first_zagreb,
    lexicographic,
    parse_edge_list,
    report,
    run_suite,
    serialize_edge_list,
    CorpusSpec,
)
from findex.invariants import f_index_edge_form

RESULTS: dict[int, str] = {}

LEFT = list(enumerate_connected(4))
RIGHT = list(enumerate_connected(3))
# corpus graphs for the structural checks, including disconnected and edgeless ones
EXTRA = [
    build_graph(0, []),
    build_graph(3, []),
    build_graph(4, [(0, 1), (1, 2), (2, 0)]),
    build_graph(6, [(0, 1), (2, 3), (3, 4)]),
    gen_family("cycle", 6),
    gen_family("complete", 5),
    gen_family("star", 6),
    gen_family("complete_bipartite", 3, 3),
]
STRUCTURAL = LEFT + EXTRA


def record(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    extra = f" ({detail})" if detail else ""
    if failures:
        extra += f" [{len(failures)} failing, first: {failures[0]}]"
    RESULTS[number] = f"[{status}] criterion {number}: {title}{extra}"
    assert not failures, RESULTS[number] + "\n" + "\n".join(map(str, failures[:20]))


def test_criterion_1_example1_reproduction():
    start = time.perf_counter()
    failures = []
    for kind in KINDS:
        for n in range(2, 7):
            for m in range(2, 7):
                poly = example1_polynomial(kind, n, m)
                direct = f_index(f_product(gen_family("path", n), gen_family("path", m), kind))
                if poly != direct:
                    failures.append((kind.value, n, m, poly, direct))
    anchors = {("S", 2, 2): 236, ("R", 3, 2): 2214, ("Q", 3, 2): 1222, ("T", 3, 2): 2822}
    for (k, n, m), want in anchors.items():
        if example1_polynomial(k, n, m) != want:
            failures.append(("anchor", k, n, m))
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        failures.append(("runtime", elapsed))
    record(1, "Example 1 polynomials equal brute force for 2 <= n, m <= 6", failures,
           f"{4 * 25} checks, {elapsed:.2f}s")


def test_criterion_2_theorem_identities():
    start = time.perf_counter()
    failures, checked = [], 0
    for g1 in LEFT:
        r1 = report(g1)
        for g2 in RIGHT:
            r2 = report(g2)
            for kind in KINDS:
                direct = f_index(f_product(g1, g2, kind))
                formula = closed_form(THEOREM_FOR_KIND[kind], r1, r2)
                checked += 1
                if formula != direct:
                    failures.append((g1.edges, g2.edges, kind.value, formula, direct))
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        failures.append(("runtime", elapsed))
    record(2, "T1/T2/T3/T4-corrected match brute force on n1 <= 4, n2 <= 3", failures,
           f"{checked} checks, {elapsed:.2f}s")


def test_criterion_3_printed_theorem4_detected():
    failures, misses = [], 0
    for g1 in LEFT:
        r1 = report(g1)
        for g2 in RIGHT:
            r2 = report(g2)
            printed = closed_form(TheoremId.T4_T_PRINTED, r1, r2)
            if printed != closed_form(TheoremId.T3_Q, r1, r2):
                failures.append(("printed != T3", g1.edges, g2.edges))
            if printed != f_index(f_product(g1, g2, "T")):
                misses += 1
    p3, p2 = gen_family("path", 3), gen_family("path", 2)
    anchor = (closed_form(TheoremId.T4_T_PRINTED, report(p3), report(p2)), f_index(f_product(p3, p2, "T")))
    if anchor != (1222, 2822):
        failures.append(("anchor", anchor))
    if misses == 0:
        failures.append("printed formula never mismatches")
    # the harness report must carry the discrepancy
    summary = run_suite(CorpusSpec("families", paths=(3, 2))).summary()
    surfaced = {"g1": "path:3", "g2": "path:2", "formula_value": 1222, "direct_value": 2822}
    if surfaced not in summary["t4_printed_mismatches"]:
        failures.append("verify summary does not list P3,P2")
    record(3, "T4-printed equals T3 and mismatches brute force", failures,
           f"{misses} printed mismatches of {len(LEFT) * len(RIGHT)}")


def test_criterion_4_structural_invariants():
    failures = []
    for g in STRUCTURAL:
        n, m, m1 = g.n, g.m, report(g).m1
        stated = {"S": 2 * m, "R": 3 * m, "Q": m + (m1 - 2 * m) // 2, "T": 2 * m + m1 // 2}
        for kind in KINDS:
            h = derive(g, kind)
            if h.m != stated[kind.value]:
                failures.append((kind.value, g.edges, h.m, stated[kind.value]))
    for g1 in LEFT:
        for g2 in RIGHT:
            lex = lexicographic(g1, g2)
            d1, d2, dl = g1.degrees(), g2.degrees(), lex.degrees()
            n2 = g2.n
            if any(dl[u * n2 + v] != n2 * d1[u] + d2[v] for u in range(g1.n) for v in range(n2)):
                failures.append(("lex degree", g1.edges, g2.edges))
            for kind in KINDS:
                h = f_product(g1, g2, kind)
                if h.n != (g1.n + g1.m) * n2:
                    failures.append(("product vertices", kind.value, g1.edges, g2.edges))
                if h.m != g1.n * g2.m + derive(g1, kind).m * n2 * n2:
                    failures.append(("product edges", kind.value, g1.edges, g2.edges))
    record(4, "derived/product vertex, edge and degree counts", failures)


def test_criterion_5_index_cross_identities():
    failures = []
    for g in STRUCTURAL:
        r = report(g)
        checks = {
            "xi2 = M1": general_first_zagreb(g, 2) == r.m1,
            "xi3 = F": general_first_zagreb(g, 3) == r.f,
            "HM = F + 2 M2": r.hm == r.f + 2 * r.m2,
            "vertex form = edge form": f_index(g) == f_index_edge_form(g),
        }
        failures += [(name, g.edges) for name, ok in checks.items() if not ok]
    record(5, "xi2 = M1, xi3 = F, HM = F + 2 M2, F vertex form = edge form", failures,
           f"{len(STRUCTURAL)} graphs")


def test_criterion_6_round_trip():
    rng = random.Random(6)
    failures = []
    for i in range(100):
        n = rng.randint(0, 15)
        p = rng.random()
        g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        h = parse_edge_list(serialize_edge_list(g))
        if h.n != g.n or h.edge_set() != g.edge_set():
            failures.append(i)
    record(6, "parse(serialize(g)) keeps vertex count and edge set, 100 random graphs", failures)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for key in sorted(RESULTS):
        print(RESULTS[key])
