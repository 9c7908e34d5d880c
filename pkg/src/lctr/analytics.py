"""Exact game-tree census: node, leaf, and distinct-state counts.

Counts use the path-count identity: a position at offsets (i, j) occurs in
the unfolded game tree once per monotone down/right path from the root, so
summing a Pascal-style path DP over the boxes counts tree nodes without
building the tree.  All accumulators are Python ints, since staircase
counts grow exponentially.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb, isqrt

from .errors import BudgetExceeded, EmptyBoard, InvalidFamilyParam
from .partition import FamilyKind, FamilySpec, Partition
from .solver import Game

#: Box budget for the census DP; the distinct-state pass is O(n) dict work.
CENSUS_BOX_BUDGET = 10**6

CENSUS_CSV_HEADER = ["family", "game", "r", "c", "nodes", "leaves", "states"]


@dataclass(frozen=True)
class TreeCensus:
    """Node count, leaf count, and distinct-position count of a game tree."""

    nodes: int
    leaves: int
    states: int


def _require_census_game(game: Game) -> None:
    if game not in (Game.LCTR, Game.DOWNRIGHT):
        raise ValueError("census covers the two normal-play games; misère trees are out of scope")


def _distinct_subpartitions(p: Partition) -> int:
    """Number of distinct nonempty subdiagrams over all box offsets.

    Each column is walked bottom-up building hash-consed (row, tail) pairs,
    so equal subdiagrams reached at different offsets collapse to one node
    id in O(1) per box.
    """
    parts = p.parts
    columns = p.conjugate().parts
    interned: dict[tuple[int, int], int] = {}
    seen: set[int] = set()
    next_id = 1  # id 0 is the empty tail
    for j, col_len in enumerate(columns):
        below = 0
        for i in range(col_len - 1, -1, -1):
            key = (parts[i] - j, below)
            node = interned.get(key)
            if node is None:
                node = next_id
                next_id += 1
                interned[key] = node
            seen.add(node)
            below = node
    return len(seen)


def census(game: Game, p: Partition) -> TreeCensus:
    """Census of the game tree rooted at the full board.

    LCTR terminal nodes are the paths that fall off the diagram; Downright
    terminal nodes are the paths into corner boxes.  The empty LCTR board
    is a bare root.
    """
    _require_census_game(game)
    if not p:
        if game is Game.DOWNRIGHT:
            raise EmptyBoard("Downright is not played on the empty diagram")
        return TreeCensus(1, 1, 1)
    if p.n > CENSUS_BOX_BUDGET:
        raise BudgetExceeded(f"{p.n} boxes exceed the census budget of {CENSUS_BOX_BUDGET}")
    parts = p.parts
    nrows = len(parts)
    box_nodes = 0
    off_diagram_paths = 0  # LCTR leaves: every path leaving the diagram ends at empty
    corner_paths = 0  # Downright leaves: paths into single-box subdiagrams
    above: list[int] = []
    for i in range(nrows):
        width = parts[i]
        row = [0] * width
        next_width = parts[i + 1] if i + 1 < nrows else 0
        for j in range(width):
            paths = above[j] if above else 0
            if j:
                paths += row[j - 1]
            elif i == 0:
                paths = 1
            row[j] = paths
            box_nodes += paths
            exits = (0 if j < next_width else 1) + (0 if j + 1 < width else 1)
            if exits:
                off_diagram_paths += paths * exits
                if exits == 2:
                    corner_paths += paths
        above = row
    states = _distinct_subpartitions(p)
    if game is Game.DOWNRIGHT:
        return TreeCensus(box_nodes, corner_paths, states)
    return TreeCensus(box_nodes + off_diagram_paths, off_diagram_paths, states + 1)


def census_closed_form(game: Game, spec: FamilySpec) -> TreeCensus:
    """Closed-form census for the staircase, rectangle, and hook families."""
    _require_census_game(game)
    kind, r, c = spec.kind, spec.r, spec.c
    if r < 1 or (kind is not FamilyKind.STAIRCASE and (c is None or c < 1)):
        raise InvalidFamilyParam(f"bad family parameters: {spec}")
    if kind is FamilyKind.STAIRCASE:
        if game is Game.LCTR:
            return TreeCensus(2 ** (r + 1) - 1, 2**r, r + 1)
        return TreeCensus(2**r - 1, 2 ** (r - 1), r)
    assert c is not None
    if kind is FamilyKind.RECTANGLE:
        if game is Game.LCTR:
            return TreeCensus(2 * comb(r + c, r) - 1, comb(r + c, r), r * c + 1)
        return TreeCensus(comb(r + c, r) - 1, comb(r + c - 2, r - 1), r * c)
    if kind is FamilyKind.GAMMA:
        thin = min(r, c) == 1
        if game is Game.LCTR:
            return TreeCensus(2 * r + 2 * c - 1, r + c, r + c if thin else r + c - 1)
        return TreeCensus(r + c - 1, 1 if thin else 2, r + c - 1 if thin else r + c - 2)
    raise InvalidFamilyParam(f"unknown family kind {kind!r}")


def state_space_bounds(game: Game, n: int) -> tuple[int, int]:
    """(lower, upper) bounds on distinct states over all boards with n boxes.

    The upper bound is the box count (plus the empty state for LCTR).  The
    lower bound is the number of distinct board sizes along any play line,
    which the staircase fitting inside n boxes witnesses: the largest r
    with r(r+1)/2 <= n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_census_game(game)
    r = (isqrt(8 * n + 1) - 1) // 2
    if game is Game.LCTR:
        return r + 1, n + 1
    return r, n


def census_csv(rows: list[tuple[str, Game, int, int, TreeCensus]]) -> str:
    """CSV dump with the fixed header family,game,r,c,nodes,leaves,states."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_CSV_HEADER)
    for family, game, r, c, result in rows:
        writer.writerow([family, game.value, r, c, result.nodes, result.leaves, result.states])
    return buf.getvalue()
