#!/usr/bin/env python3
"""Tabulate every size bound next to the exact optimum at desk scale.

For each (q, n, even d) in a small grid, print the insdel Singleton
ceiling, the tightest upper bound with its clause, the sphere-counting
lower bound, and the exact optimum from the clique solver. Also compare
the pigeonhole construction guarantee against the sphere-counting bound
on a coarse parameter grid.
"""

import argparse
from fractions import Fraction

from insdel.bounds import (
    exact_iq,
    levenshtein_lower_bound,
    singleton_bound,
    size_upper_bound,
)
from insdel.lift import guarantee_report


def exact_table(max_q: int, max_n: int, vertex_budget: int) -> None:
    print(f"{'q':>3} {'n':>3} {'d':>3} {'singleton':>10} {'upper':>8} {'clause':>6} "
          f"{'lower':>10} {'exact':>6}")
    for q in range(2, max_q + 1):
        for n in range(2, max_n + 1):
            if q**n > vertex_budget:
                continue
            for d in range(2, 2 * n + 1, 2):
                lower = levenshtein_lower_bound(q, n, d)
                upper, clause = size_upper_bound(q, n, d)
                size, _ = exact_iq(q, n, d)
                print(
                    f"{q:>3} {n:>3} {d:>3} {singleton_bound(q, n, d):>10} "
                    f"{upper:>8} {clause:>6} {str(lower):>10} {size:>6}"
                )


def guarantee_vs_sphere(qs, ns) -> None:
    print(f"\n{'q':>4} {'n':>4} {'delta':>5} {'guarantee':>14} {'sphere lower':>16}")
    for q in qs:
        for n in ns:
            for delta in (2, 3):
                if n < delta:
                    continue
                g = guarantee_report(q, n, delta)["guaranteed_size"]
                lower = levenshtein_lower_bound(q, n, 2 * delta)
                mark = "  <-- guarantee wins" if Fraction(g) >= lower else ""
                print(f"{q:>4} {n:>4} {delta:>5} {g:>14} {str(lower):>16}{mark}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-q", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument(
        "--vertex-budget",
        type=int,
        default=100,
        help="skip exact searches above this vertex count (they get slow fast)",
    )
    args = parser.parse_args()
    exact_table(args.max_q, args.max_n, args.vertex_budget)
    guarantee_vs_sphere(qs=(4, 8, 16, 64), ns=(8, 12, 16))


if __name__ == "__main__":
    main()
