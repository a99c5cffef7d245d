"""Brute-force verification of the closed forms over graph corpora."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Literal

from .closed_forms import THEOREM_FOR_KIND, TheoremId, closed_form, example1_polynomial
from .derived import KINDS, DerivedKind, as_kind
from .graph import Graph, build_graph, gen_family, is_connected
from .invariants import f_index, report
from .products import f_product

MAX_ENUMERATION_N = 7
DEFAULT_CEILING = 5000
DEFAULT_RETRIES = 1000


class LimitExceeded(ValueError):
    pass


class RetriesExhausted(RuntimeError):
    pass


class NotConnected(ValueError):
    def __init__(self, which: str):
        super().__init__(f"{which} is not connected")
        self.which = which


class ProductTooLarge(ValueError):
    def __init__(self, actual: int, ceiling: int):
        super().__init__(f"product would have {actual} vertices, ceiling is {ceiling}")
        self.actual, self.ceiling = actual, ceiling


class PairError(RuntimeError):
    """Wraps a failure with the pair that caused it."""


# --- graph descriptors -------------------------------------------------------


@dataclass(frozen=True)
class NamedGraph:
    descriptor: str
    graph: Graph


def edge_descriptor(g: Graph) -> str:
    body = ",".join(f"{u}-{v}" for u, v in g.canonical_edges())
    return f"n={g.n};{body}"


def family_descriptor(family: str, *params: int) -> str:
    return f"{family}:{','.join(map(str, params))}"


def from_descriptor(text: str) -> Graph:
    """Rebuild a graph from :func:`edge_descriptor` or :func:`family_descriptor` text."""
    if text.startswith("n="):
        head, _, body = text.partition(";")
        pairs = [tuple(map(int, e.split("-"))) for e in body.split(",") if e]
        return build_graph(int(head[2:]), pairs)
    family, _, params = text.partition(":")
    return gen_family(family, *map(int, params.split(",")))


def named(g: Graph) -> NamedGraph:
    return NamedGraph(edge_descriptor(g), g)


def named_family(family: str, *params: int) -> NamedGraph:
    return NamedGraph(family_descriptor(family, *params), gen_family(family, *params))


# --- corpora -----------------------------------------------------------------


def enumerate_connected(max_n: int) -> Iterator[Graph]:
    """Every labeled connected simple graph on 1..max_n vertices.

    Edge subsets of K_n are visited in increasing bitmask order, bit i
    standing for the i-th pair of ``combinations(range(n), 2)``.
    """
    if max_n > MAX_ENUMERATION_N:
        raise LimitExceeded(f"max_n={max_n} exceeds {MAX_ENUMERATION_N}")
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            if n > 1 and mask == 0:
                continue
            g = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if is_connected(g):
                yield g


def random_connected(
    n: int,
    edge_prob: Fraction | float | str,
    seed: int | random.Random,
    retries: int = DEFAULT_RETRIES,
) -> Graph:
    """Sample G(n, p) until connected.

    ``seed`` feeds a ``random.Random`` (Mersenne Twister).  Each attempt
    walks the pairs ``(u, v)``, ``u < v``, in lexicographic order and keeps
    a pair iff ``rng.randrange(q) < p`` for ``edge_prob = p/q`` in lowest
    terms.  Attempts continue on the same stream.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    prob = Fraction(edge_prob).limit_denominator(10**9) if isinstance(edge_prob, float) else Fraction(edge_prob)
    if not 0 < prob <= 1:
        raise ValueError(f"edge_prob must lie in (0, 1], got {prob}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(retries):
        g = build_graph(n, [p for p in pairs if rng.randrange(prob.denominator) < prob.numerator])
        if is_connected(g):
            return g
    raise RetriesExhausted(f"no connected G({n}, {prob}) after {retries} attempts")


@dataclass
class CorpusSpec:
    mode: Literal["exhaustive", "families", "random"] = "exhaustive"
    max_n1: int = 3
    max_n2: int = 3
    sample_count: int = 0
    seed: int = 0
    ceiling: int = DEFAULT_CEILING
    edge_prob: Fraction = Fraction(1, 2)
    # families mode restricted to paths P_2..P_N x P_2..P_M
    paths: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "families", "random"):
            raise ValueError(f"unknown corpus mode {self.mode!r}")
        if self.max_n1 < 1 or self.max_n2 < 1:
            raise ValueError("max_n1 and max_n2 must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.mode == "exhaustive":
            if max(self.max_n1, self.max_n2) > MAX_ENUMERATION_N:
                raise LimitExceeded(f"exhaustive mode allows at most {MAX_ENUMERATION_N} vertices")
            worst = (self.max_n1 + self.max_n1 * (self.max_n1 - 1) // 2) * self.max_n2
            if worst > self.ceiling:
                raise ProductTooLarge(worst, self.ceiling)


def _family_members(max_n: int) -> list[NamedGraph]:
    out = [named_family("path", n) for n in range(1, max_n + 1)]
    out += [named_family("cycle", n) for n in range(3, max_n + 1)]
    out += [named_family("complete", n) for n in range(3, max_n + 1)]
    out += [named_family("star", n) for n in range(4, max_n + 1)]
    out += [
        named_family("complete_bipartite", a, b)
        for a in range(2, max_n + 1)
        for b in range(a, max_n + 1 - a)
    ]
    return out


def build_corpus(spec: CorpusSpec) -> list[tuple[NamedGraph, NamedGraph]]:
    if spec.mode == "exhaustive":
        left = [named(g) for g in enumerate_connected(spec.max_n1)]
        right = left if spec.max_n2 == spec.max_n1 else [named(g) for g in enumerate_connected(spec.max_n2)]
        return [(a, b) for a in left for b in right]
    if spec.mode == "families":
        if spec.paths is not None:
            n_max, m_max = spec.paths
            return [
                (named_family("path", n), named_family("path", m))
                for n in range(2, n_max + 1)
                for m in range(2, m_max + 1)
            ]
        return [(a, b) for a in _family_members(spec.max_n1) for b in _family_members(spec.max_n2)]
    rng = random.Random(spec.seed)
    pairs = []
    for _ in range(spec.sample_count):
        g1 = random_connected(rng.randint(1, spec.max_n1), spec.edge_prob, rng)
        g2 = random_connected(rng.randint(1, spec.max_n2), spec.edge_prob, rng)
        pairs.append((named(g1), named(g2)))
    return pairs


# --- checking ----------------------------------------------------------------


@dataclass
class VerificationRecord:
    g1_descriptor: str
    g2_descriptor: str
    kind: str
    theorem: str
    formula_value: int
    direct_value: int
    match: bool
    product_size: tuple[int, int]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["product_size"] = list(self.product_size)
        return d


def _direct(g1: Graph, g2: Graph, kind: DerivedKind, ceiling: int) -> tuple[int, tuple[int, int]]:
    if not is_connected(g1):
        raise NotConnected("g1")
    if not is_connected(g2):
        raise NotConnected("g2")
    size = (g1.n + g1.m) * g2.n
    if size > ceiling:
        raise ProductTooLarge(size, ceiling)
    prod = f_product(g1, g2, kind)
    return f_index(prod, check=True), (prod.n, prod.m)


def verify_pair(
    g1: Graph | NamedGraph,
    g2: Graph | NamedGraph,
    kind: DerivedKind | str,
    theorem: TheoremId | None = None,
    ceiling: int = DEFAULT_CEILING,
) -> VerificationRecord:
    """Compare the closed form for ``kind`` against the F-index of the built product."""
    a = g1 if isinstance(g1, NamedGraph) else named(g1)
    b = g2 if isinstance(g2, NamedGraph) else named(g2)
    kind = as_kind(kind)
    theorem = theorem or THEOREM_FOR_KIND[kind]
    direct, size = _direct(a.graph, b.graph, kind, ceiling)
    formula = closed_form(theorem, report(a.graph), report(b.graph))
    return VerificationRecord(a.descriptor, b.descriptor, kind.value, theorem.value, formula, direct, formula == direct, size)


def _path_length(ng: NamedGraph) -> int | None:
    if ng.descriptor.startswith("path:"):
        return int(ng.descriptor[5:])
    return None


@dataclass
class PairResult:
    records: list[VerificationRecord]
    # (kind, n, m, polynomial value, direct value) for path pairs with n, m >= 2
    example1: list[tuple[str, int, int, int, int]] = field(default_factory=list)


def check_pair(pair: tuple[NamedGraph, NamedGraph], ceiling: int = DEFAULT_CEILING) -> PairResult:
    a, b = pair
    r1, r2 = report(a.graph), report(b.graph)
    n, m = _path_length(a), _path_length(b)
    result = PairResult([])
    for kind in KINDS:
        try:
            direct, size = _direct(a.graph, b.graph, kind, ceiling)
        except (NotConnected, ProductTooLarge) as exc:
            raise PairError(f"{a.descriptor} x {b.descriptor} [{kind}]: {exc}") from exc
        theorems = [THEOREM_FOR_KIND[kind]]
        if kind is DerivedKind.T:
            theorems.append(TheoremId.T4_T_PRINTED)
        for t in theorems:
            value = closed_form(t, r1, r2)
            result.records.append(
                VerificationRecord(a.descriptor, b.descriptor, kind.value, t.value, value, direct, value == direct, size)
            )
        if n is not None and m is not None and n >= 2 and m >= 2:
            result.example1.append((kind.value, n, m, example1_polynomial(kind, n, m), direct))
    return result


GATING = {t.value for t in THEOREM_FOR_KIND.values()}


@dataclass
class SuiteResult:
    records: list[VerificationRecord]
    example1: list[tuple[str, int, int, int, int]]

    @property
    def gating(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.theorem in GATING]

    @property
    def printed(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.theorem == TheoremId.T4_T_PRINTED.value]

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.gating)

    def summary(self) -> dict:
        gating, printed = self.gating, self.printed
        t3 = {
            (r.g1_descriptor, r.g2_descriptor): r.formula_value
            for r in self.records
            if r.theorem == TheoremId.T3_Q.value
        }
        per_theorem = {}
        for t in TheoremId:
            rs = [r for r in self.records if r.theorem == t.value]
            per_theorem[t.value] = {"checked": len(rs), "mismatches": sum(not r.match for r in rs)}
        ex_bad = [e for e in self.example1 if e[3] != e[4]]
        return {
            "pairs": len(gating) // len(KINDS),
            "checked": len(gating),
            "mismatches": sum(not r.match for r in gating),
            "per_theorem": per_theorem,
            "t4_printed_equals_t3": all(
                r.formula_value == t3[(r.g1_descriptor, r.g2_descriptor)] for r in printed
            ),
            "t4_printed_mismatches": [
                {"g1": r.g1_descriptor, "g2": r.g2_descriptor,
                 "formula_value": r.formula_value, "direct_value": r.direct_value}
                for r in printed
                if not r.match
            ],
            "example1_checked": len(self.example1),
            "example1_mismatches": [
                {"kind": k, "n": n, "m": m, "polynomial": p, "direct": d} for k, n, m, p, d in ex_bad
            ],
        }


def run_suite(spec: CorpusSpec, threads: int = 1) -> SuiteResult:
    """Check every corpus pair under all four kinds.

    Records come back in corpus order, then kind order S, R, Q, T, with the
    printed T-theorem record after the corrected one, whatever ``threads``.
    """
    corpus = build_corpus(spec)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check_pair, corpus, [spec.ceiling] * len(corpus), chunksize=16))
    else:
        results = [check_pair(p, spec.ceiling) for p in corpus]
    records = [r for res in results for r in res.records]
    example1 = [e for res in results for e in res.example1]
    return SuiteResult(records, example1)
