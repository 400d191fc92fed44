#!/usr/bin/env python3
"""Tabulate the border-word growth ratio against the golden ratio squared.

Lengths come from the recurrence alone, so arbitrarily large indices are
cheap; the ratio converging to phi^2 is the growth-rate evidence that the
contour languages outpace anything a plain pushdown automaton accepts.
"""

import argparse
import math

from itpda.words import growth_evidence, pair_lengths

PHI_SQUARED = ((1 + math.sqrt(5)) / 2) ** 2


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=25)
    args = parser.parse_args()

    print(f"{'n':>4} {'|w_n|':>16} {'|w_n+1|/|w_n|':>16} {'off phi^2':>12}")
    for n in range(1, args.max_n + 1):
        ratio = growth_evidence(n)
        print(
            f"{n:>4} {pair_lengths(n)[1]:>16} {float(ratio):>16.10f} "
            f"{abs(float(ratio) - PHI_SQUARED):>12.2e}"
        )


if __name__ == "__main__":
    main()
