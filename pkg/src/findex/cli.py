"""Command line front end.

Exit status: 0 success; 1 failed verification or bad input data;
2 unknown subcommand, flag or missing argument; 3 invalid flag value.
Structured output is JSON (one object per line for ``verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .closed_forms import TheoremId, closed_form, example1_polynomial
from .derived import DerivedKind, derive
from .edgelist import EdgeListError, read_edge_list, serialize_edge_list
from .graph import GraphError
from .invariants import report
from .products import f_product, lexicographic
from .verify import DEFAULT_CEILING, CorpusSpec, PairError, run_suite

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_VALUE = 3


class UsageError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        # argparse reports bad values as "argument X: invalid ..."
        raise UsageError(message, EXIT_VALUE if "invalid" in message else EXIT_USAGE)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(text)
    return value


_positive.__name__ = "positive int"


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(text)
    return value


_nonnegative.__name__ = "nonnegative int"


def _probability(text: str) -> Fraction:
    value = Fraction(text)
    if not 0 < value <= 1:
        raise ValueError(text)
    return value


_probability.__name__ = "probability"

KIND_CHOICES = [k.value for k in DerivedKind]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="findex", description="F-index of lexicographic F-products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("indices", help="degree-based indices of a graph")
    p.add_argument("file")

    p = sub.add_parser("derive", help="S, R, Q or T graph of a graph")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=KIND_CHOICES)
    p.add_argument("-o", "--output")

    p = sub.add_parser("product", help="F-product or lexicographic product of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--kind", required=True, choices=KIND_CHOICES + ["lex"])
    p.add_argument("-o", "--output")

    p = sub.add_parser("formula", help="closed-form F-index of an F-product")
    p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("verify", help="check the closed forms against built products")
    p.add_argument("--mode", choices=["exhaustive", "families", "random"])
    p.add_argument("--max-n1", type=_positive, default=3)
    p.add_argument("--max-n2", type=_positive, default=3)
    p.add_argument("--paths", type=_positive, nargs=2, metavar=("N", "M"))
    p.add_argument("--samples", type=_nonnegative, default=0)
    p.add_argument("--seed", type=_nonnegative, default=0)
    p.add_argument("--edge-prob", type=_probability, default=Fraction(1, 2))
    p.add_argument("--ceiling", type=_positive, default=DEFAULT_CEILING)
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("example1", help="printed path polynomial for P_n[P_m]_F")
    p.add_argument("--op", required=True, choices=KIND_CHOICES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    return parser


def _emit(text: str, output: str | None, out) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _verify(args, out) -> int:
    mode = args.mode or ("families" if args.paths else "exhaustive")
    if args.paths and mode != "families":
        raise UsageError("--paths requires --mode families", EXIT_VALUE)
    spec = CorpusSpec(
        mode=mode,
        max_n1=args.max_n1,
        max_n2=args.max_n2,
        sample_count=args.samples,
        seed=args.seed,
        ceiling=args.ceiling,
        edge_prob=args.edge_prob,
        paths=tuple(args.paths) if args.paths else None,
    )
    result = run_suite(spec, threads=args.threads)
    for rec in result.records:
        out.write(json.dumps({"type": "record", **rec.as_dict()}) + "\n")
    out.write(json.dumps({"type": "summary", **result.summary()}) + "\n")
    return 0 if result.ok else EXIT_FAIL


def run(args: argparse.Namespace, out) -> int:
    if args.command == "indices":
        out.write(json.dumps(report(read_edge_list(args.file)).as_dict()) + "\n")
    elif args.command == "derive":
        g = derive(read_edge_list(args.file), args.kind)
        _emit(serialize_edge_list(g), args.output, out)
    elif args.command == "product":
        g1, g2 = read_edge_list(args.file1), read_edge_list(args.file2)
        g = lexicographic(g1, g2) if args.kind == "lex" else f_product(g1, g2, args.kind)
        _emit(serialize_edge_list(g), args.output, out)
    elif args.command == "formula":
        r1 = report(read_edge_list(args.file1))
        r2 = report(read_edge_list(args.file2))
        out.write(f"{closed_form(args.theorem, r1, r2)}\n")
    elif args.command == "verify":
        return _verify(args, out)
    elif args.command == "example1":
        out.write(f"{example1_polynomial(args.op, args.n, args.m)}\n")
    return 0


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return run(args, out)
    except UsageError as exc:
        kind = "invalid value" if exc.status == EXIT_VALUE else "usage error"
        err.write(f"findex: {kind}: {exc}\n")
        return exc.status
    except (EdgeListError, GraphError, PairError, ValueError, ArithmeticError, OSError) as exc:
        err.write(f"findex: error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
