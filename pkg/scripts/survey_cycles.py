#!/usr/bin/env python3
"""Tabulate cycle tone chromatic numbers from the block constructions.

Every value printed comes from a coloring that was built and verified; with
--exact the small lengths are additionally cross-checked by the search.
"""

import argparse

from ttone.blocks import cycle_value
from ttone.constructions import color_cycle
from ttone.exact import tau
from ttone.graphs import gen_cycle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=40)
    parser.add_argument("--exact", action="store_true",
                        help="cross-check n <= 9 against the exact solver")
    args = parser.parse_args()

    tones = (2, 3, 4, 5)
    print("n   " + "".join(f"t={t:<4}" for t in tones))
    for n in range(3, args.max_n + 1):
        row = [f"{n:<4}"]
        for t in tones:
            col = color_cycle(n, t)
            used = len(col.colors_used())
            assert used == cycle_value(n, t)
            row.append(f"{used:<5}")
        print("".join(row))

    if args.exact:
        print("\nexact cross-check (n <= 9):")
        for n in range(3, 10):
            for t in tones:
                got = tau(gen_cycle(n), t).value
                want = cycle_value(n, t)
                mark = "ok" if got == want else "MISMATCH"
                print(f"  n={n} t={t}: search {got}, construction {want} [{mark}]")
                assert got == want


if __name__ == "__main__":
    main()
