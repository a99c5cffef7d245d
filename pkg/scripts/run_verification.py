"""Run the brute-force theorem checks and write the records to disk.

    python scripts/run_verification.py --max-n1 4 --max-n2 3 --out results/exhaustive.jsonl
    python scripts/run_verification.py --mode random --samples 200 --max-n1 7 --max-n2 4 --seed 1

Prints a per-theorem table; exit status is nonzero if any of the four
checked theorems disagrees with the built product.
"""

import argparse
import json
import os
import sys
import time

from findex.verify import CorpusSpec, run_suite


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--mode", default="exhaustive", choices=["exhaustive", "families", "random"])
    parser.add_argument("--max-n1", type=int, default=4)
    parser.add_argument("--max-n2", type=int, default=3)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--ceiling", type=int, default=5000)
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--out")
    args = parser.parse_args()

    spec = CorpusSpec(args.mode, args.max_n1, args.max_n2, args.samples, args.seed, args.ceiling)
    start = time.perf_counter()
    result = run_suite(spec, threads=args.threads)
    elapsed = time.perf_counter() - start
    summary = result.summary()

    if args.out:
        os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
        with open(args.out, "w") as fh:
            for rec in result.records:
                fh.write(json.dumps(rec.as_dict()) + "\n")
            fh.write(json.dumps({"summary": summary}) + "\n")

    print(f"{summary['pairs']} pairs in {elapsed:.1f}s")
    for theorem, counts in summary["per_theorem"].items():
        print(f"  {theorem:<13} checked {counts['checked']:>6}  mismatches {counts['mismatches']:>6}")
    print(f"  printed T4 == T3 on every pair: {summary['t4_printed_equals_t3']}")
    sys.exit(0 if result.ok else 1)


if __name__ == "__main__":
    main()
