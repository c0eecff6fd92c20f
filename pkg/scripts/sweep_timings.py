#!/usr/bin/env python3
"""Timing table for the verification sweep as the weight grows.

Useful for eyeballing how the sparse-string kernels scale: the character
supports grow roughly like the module dimensions, and every timing below is
a full all-elements sweep at one weight.
"""

import argparse
import time

from demchar import build_datum, generate
from demchar.theorem import sweep_verify_theorem


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", default="B", dest="family")
    parser.add_argument("--rank", type=int, default=3)
    parser.add_argument("--max-coord", type=int, default=5)
    args = parser.parse_args()

    g = generate(build_datum(args.family, args.rank))
    print(f"type {g.datum.family}{g.datum.rank}, |W| = {g.order}")
    print(f"{'lambda':<16} {'dim(rhs at w0)':>15} {'time':>8}")
    for c in range(1, args.max_coord + 1):
        lam = (c,) * g.datum.rank
        t0 = time.time()
        reports = sweep_verify_theorem(g, lam)
        dt = time.time() - t0
        assert all(r.passed for r in reports)
        print(f"{str(list(lam)):<16} {reports[g.longest].dim_rhs:>15} {dt:>7.2f}s")


if __name__ == "__main__":
    main()
