#!/usr/bin/env python3
"""Survey random no-source rank-2 graphs: how often is the shift action
free, the monoid atomic, the graph cofinal?

Usage: python scripts/random_survey.py [--count N] [--seed-base S]
"""

import argparse
import sys
from collections import Counter

from kgraphs import families
from kgraphs.classify import is_cofinal
from kgraphs.monoid import DEFAULT_BOUNDS, acts_freely, is_atomic


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed-base", type=int, default=0)
    args = ap.parse_args()

    tallies = {"free": Counter(), "atomic": Counter(), "cofinal": Counter()}
    for i in range(args.count):
        g = families.random_2graph(args.seed_base + i)
        tallies["free"][acts_freely(g, DEFAULT_BOUNDS).value] += 1
        tallies["atomic"][is_atomic(g).value] += 1
        tallies["cofinal"][is_cofinal(g).value] += 1

    print(f"{args.count} random graphs (seeds {args.seed_base}.."
          f"{args.seed_base + args.count - 1})")
    for prop, counts in tallies.items():
        parts = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
        print(f"  {prop:8s} {parts}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
