#!/usr/bin/env python3
"""Run the full verification sweep over the built-in type matrix and print a table.

Checks, per type: the summed dual-top-cohomology identity and the
kernel-character sum identity for every Weyl-group element and every regular
dominant weight on the grid, plus kernel-basis membership and decomposition
round trips for the rank-2-friendly types.  Exits 1 on any mismatch.
"""

import argparse
import itertools
import sys
import time

from demchar import build_datum, generate
from demchar.charring import zero
from demchar.kernel import decompose, in_kernel, kernel_basis_element
from demchar.rootsys import weight_neg, weight_sub
from demchar.theorem import sweep_verify_lemma31, sweep_verify_theorem

SWEEP_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)]
KERNEL_TYPES = [("A", 1), ("A", 2), ("B", 2)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=2, help="weight coordinates in [1, grid]")
    args = parser.parse_args()

    failures = 0
    print(f"{'type':<6} {'|W|':>5} {'lambdas':>8} {'checks':>7} {'theorem':>8} {'lemma':>6} {'time':>7}")
    for family, rank in SWEEP_TYPES:
        g = generate(build_datum(family, rank))
        lams = [tuple(c) for c in itertools.product(range(1, args.grid + 1), repeat=rank)]
        t0 = time.time()
        theorem_ok = lemma_ok = True
        checks = 0
        for lam in lams:
            theorem_ok &= all(r.passed for r in sweep_verify_theorem(g, lam))
            lemma_ok &= all(r.passed for r in sweep_verify_lemma31(g, lam))
            checks += 2 * g.order
        failures += (not theorem_ok) + (not lemma_ok)
        print(
            f"{family}{rank:<5} {g.order:>5} {len(lams):>8} {checks:>7} "
            f"{'ok' if theorem_ok else 'FAIL':>8} {'ok' if lemma_ok else 'FAIL':>6} "
            f"{time.time() - t0:>6.2f}s"
        )

    print()
    print(f"{'type':<6} {'basis':>6} {'member':>7} {'roundtrip':>10}")
    for family, rank in KERNEL_TYPES:
        g = generate(build_datum(family, rank))
        d = g.datum
        w0 = g.longest_element
        grid = [tuple(c) for c in itertools.product(range(1, args.grid + 1), repeat=rank)]
        member_ok = roundtrip_ok = True
        for lam in grid:
            v = kernel_basis_element(g, lam)
            member_ok &= in_kernel(g, v)
            expected = {weight_neg(w0.apply(weight_sub(lam, d.rho))): 1}
            roundtrip_ok &= decompose(g, v) == expected
        failures += (not member_ok) + (not roundtrip_ok)
        print(
            f"{family}{rank:<5} {len(grid):>6} {'ok' if member_ok else 'FAIL':>7} "
            f"{'ok' if roundtrip_ok else 'FAIL':>10}"
        )

    print()
    print("all identities verified" if not failures else f"{failures} check groups FAILED")
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())
