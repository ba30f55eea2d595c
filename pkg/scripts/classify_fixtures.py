#!/usr/bin/env python3
"""Classify every built-in family and print a verdict table.

Usage: python scripts/classify_fixtures.py [--depth N] [--json]
"""

import argparse
import json
import sys
import time
from dataclasses import replace

from kgraphs import families
from kgraphs.classify import kp_report
from kgraphs.docio import report_to_document
from kgraphs.monoid import DEFAULT_BOUNDS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=None,
                    help="sampling depth for infinite families")
    ap.add_argument("--json", action="store_true",
                    help="emit one report document per line")
    args = ap.parse_args()

    bounds = DEFAULT_BOUNDS
    if args.depth is not None:
        bounds = replace(bounds, sample_depth=args.depth)

    names = sorted(families.FAMILIES)
    rows = []
    for name in names:
        g = families.FAMILIES[name]()
        t0 = time.perf_counter()
        report = kp_report(g, bounds)
        dt = time.perf_counter() - t0
        doc = report_to_document(report, bounds, {"total": dt})
        if args.json:
            print(doc.to_json())
        rows.append((name, dt, {k: v["verdict"]
                                for k, v in doc.properties.items()}))

    if not args.json:
        props = list(rows[0][2])
        short = {"yes": "Y", "no": "N", "unknown": "?"}
        width = max(len(n) for n, _, _ in rows) + 2
        header = "family".ljust(width) + "  ".join(f"{p[:12]:>12}" for p in props)
        print(header)
        print("-" * len(header))
        for name, dt, verdicts in rows:
            cells = "  ".join(f"{short[verdicts[p]]:>12}" for p in props)
            print(name.ljust(width) + cells + f"   ({dt:.2f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
