"""Tabulate the printed path polynomials against the built products.

    python scripts/example1_table.py [--max 8]

Prints one row per (kind, n, m) with the polynomial value, the closed form
value, the direct F-index and whether all three agree.
"""

import argparse

from findex import KINDS, THEOREM_FOR_KIND, closed_form, example1_polynomial, f_index, f_product, gen_family, report


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max", type=int, default=8)
    args = parser.parse_args()

    print(f"{'kind':>4} {'n':>3} {'m':>3} {'polynomial':>14} {'closed form':>14} {'direct':>14}  ok")
    disagreements = []
    for kind in KINDS:
        for n in range(2, args.max + 1):
            for m in range(2, args.max + 1):
                pn, pm = gen_family("path", n), gen_family("path", m)
                poly = example1_polynomial(kind, n, m)
                formula = closed_form(THEOREM_FOR_KIND[kind], report(pn), report(pm))
                direct = f_index(f_product(pn, pm, kind))
                ok = poly == formula == direct
                if not ok:
                    disagreements.append((kind.value, n, m))
                print(f"{kind.value:>4} {n:>3} {m:>3} {poly:>14} {formula:>14} {direct:>14}  {'yes' if ok else 'NO'}")
    print(f"\n{len(disagreements)} disagreements: {disagreements}")


if __name__ == "__main__":
    main()
