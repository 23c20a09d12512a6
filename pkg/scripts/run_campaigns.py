#!/usr/bin/env python3
"""Run the exhaustive verification campaign for small ground sets.

Each campaign checks, at one size: J-triviality of the reflexive monoid, the
block-group property of the Hall monoid, the idempotent-closure equivalence,
the subset-to-relation embedding, and the semidirect-product surjection.

Usage:
  python scripts/run_campaigns.py --max-n 3
"""

import argparse

from hallkit import verification_campaign


def main():
    parser = argparse.ArgumentParser(description="verification campaigns")
    parser.add_argument("--max-n", type=int, default=3, help="largest ground set (default: 3)")
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.max_n + 1):
        report = verification_campaign(n)
        print(f"n = {n}: {'all checks pass' if report.passed else 'FAILURES'}")
        for check in report.checks:
            mark = "ok " if check.passed else "FAIL"
            print(f"  [{mark}] {check.name}  {check.details}")
            for witness in check.witnesses:
                print(f"         witness: {witness}")
            if not check.passed:
                failures += 1
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
