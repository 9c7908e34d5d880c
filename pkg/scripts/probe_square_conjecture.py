#!/usr/bin/env python3
"""Probe, never assert: does the square board maximize game-tree nodes?

For each k, scan every partition of k*k boxes, census both games, and
report whether the k-by-k square attains the maximum node count.  The scan
is exhaustive but exponential in the number of partitions, so keep k small
(k = 5 means p(25) = 1958 boards).

Usage:
    python scripts/probe_square_conjecture.py --max-side 5
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lctr import Game, census, iter_partitions, rectangle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-side", type=int, default=5)
    args = parser.parse_args()

    for k in range(1, args.max_side + 1):
        n = k * k
        square = rectangle(k, k)
        for game in (Game.LCTR, Game.DOWNRIGHT):
            best = None
            best_nodes = -1
            boards = 0
            for p in iter_partitions(n):
                boards += 1
                nodes = census(game, p).nodes
                if nodes > best_nodes:
                    best, best_nodes = p, nodes
            square_nodes = census(game, square).nodes
            verdict = "square is maximal" if best == square else f"maximum is {best} with {best_nodes} nodes"
            print(
                f"n={n:>3} ({boards} boards) {game.value:>9}: "
                f"square nodes={square_nodes}, {verdict}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
