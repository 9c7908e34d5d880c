"""Brute-force reference solvers: per-box dynamic programming over the diagram.

These run in time linear in the box count and exist as the ground truth the
logarithmic solvers are checked against, and as the benchmark baseline.  The
grid for a diagram stores one game value per box, addressed by (row, column)
offsets from the top-left; children outside the diagram are the empty
position.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BudgetExceeded, EmptyBoard, StartIsTerminal
from .partition import Partition

# mex of two child values (values never exceed 3).
_MEX2 = ((1, 2, 1, 1), (2, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0))
# mex of a single child value.
_MEX1 = (1, 0, 0, 0)

#: Largest box count the O(n) routines accept; keeps the baseline honest.
ORACLE_BOX_BUDGET = 10**8


class PlayConvention(Enum):
    NORMAL = "normal"
    MISERE = "misere"


class Outcome(Enum):
    """Winner classification: P = previous player wins, N = next player wins."""

    P = "P"
    N = "N"


def _check_budget(p: Partition) -> None:
    if p.n > ORACLE_BOX_BUDGET:
        raise BudgetExceeded(f"{p.n} boxes exceed the oracle budget of {ORACLE_BOX_BUDGET}")


@dataclass
class SgGrid:
    """Game values for every box of a diagram, as ragged rows.

    ``cells_updated`` counts one update per box, which is the measured cost
    of the dynamic program.
    """

    partition: Partition
    rows: list[list[int]]
    cells_updated: int

    def value(self, i: int, j: int) -> int:
        """Value at box (i, j); 0 (the empty position) outside the diagram."""
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return 0

    def root(self) -> int:
        return self.value(0, 0)

    def dump(self) -> str:
        """One line per row, space-separated digits, mirroring the diagram."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


@dataclass
class PnGrid:
    """P/N classification for every box plus the empty position."""

    partition: Partition
    rows: list[list[Outcome]]
    empty_outcome: Outcome

    def value(self, i: int, j: int) -> Outcome:
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return self.empty_outcome

    def root(self) -> Outcome:
        return self.value(0, 0)

    def dump(self) -> str:
        return "\n".join(" ".join(v.value for v in row) for row in self.rows)


def oracle_sg_lctr(p: Partition) -> SgGrid:
    """Row/column-removal game values for every box, filled bottom-right first.

    Every box takes the mex of its two children: the box below (one top-row
    removal deeper) and the box to the right (one left-column removal
    deeper), where the empty position counts 0.
    """
    _check_budget(p)
    parts = p.parts
    nrows = len(parts)
    rows: list[list[int]] = [[] for _ in range(nrows)]
    cells = 0
    below_row: list[int] = []
    mex2 = _MEX2
    for i in range(nrows - 1, -1, -1):
        width = parts[i]
        below_width = len(below_row)
        row = [0] * width
        right = 0  # child beyond the row end is the empty position
        for j in range(width - 1, -1, -1):
            below = below_row[j] if j < below_width else 0
            right = mex2[below][right]
            row[j] = right
        cells += width
        rows[i] = row
        below_row = row
    return SgGrid(p, rows, cells)


def oracle_sg_downright(p: Partition) -> SgGrid:
    """Restricted-rook game values for every box.

    Corners are 0; a lone row or column takes the mex of its single child;
    interior boxes take the mex of both children.
    """
    if not p:
        raise EmptyBoard("Downright is not played on the empty diagram")
    _check_budget(p)
    parts = p.parts
    nrows = len(parts)
    rows: list[list[int]] = [[] for _ in range(nrows)]
    cells = 0
    below_row: list[int] = []
    below_width = 0
    mex1, mex2 = _MEX1, _MEX2
    for i in range(nrows - 1, -1, -1):
        width = parts[i]
        row = [0] * width
        for j in range(width - 1, -1, -1):
            has_below = j < below_width
            if j == width - 1:
                row[j] = mex1[below_row[j]] if has_below else 0
            elif has_below:
                row[j] = mex2[below_row[j]][row[j + 1]]
            else:
                row[j] = mex1[row[j + 1]]
        cells += width
        rows[i] = row
        below_row = row
        below_width = width
    return SgGrid(p, rows, cells)


def oracle_misere_pn(p: Partition) -> PnGrid:
    """Last-mover-loses P/N classes for the row/column-removal game.

    The empty position is N (the player to move has already won).  A box is
    P exactly when no move from it reaches a P position.
    """
    _check_budget(p)
    parts = p.parts
    nrows = len(parts)
    rows: list[list[Outcome]] = [[] for _ in range(nrows)]
    below_row: list[Outcome] = []
    below_width = 0
    for i in range(nrows - 1, -1, -1):
        width = parts[i]
        row: list[Outcome] = [Outcome.N] * width
        for j in range(width - 1, -1, -1):
            below_p = j < below_width and below_row[j] is Outcome.P
            right_p = j + 1 < width and row[j + 1] is Outcome.P
            row[j] = Outcome.N if (below_p or right_p) else Outcome.P
        rows[i] = row
        below_row = row
        below_width = width
    return PnGrid(p, rows, Outcome.N)


@dataclass(frozen=True)
class GenericGame:
    """A finite acyclic game: positions, a move relation, and a start.

    ``moves`` maps every position to the frozenset of positions reachable in
    one move (possibly empty).  Terminals are the positions with no moves.
    """

    positions: frozenset
    moves: dict
    start: object

    def terminals(self) -> frozenset:
        return frozenset(pos for pos in self.positions if not self.moves[pos])


#: Identifier of the empty position in diagram game graphs.
EMPTY_POS = "empty"


def lctr_game_graph(p: Partition) -> GenericGame:
    """Deduplicated position graph of the row/column-removal game.

    Positions are (i, j) offset pairs for the boxes plus one shared empty
    position; a position reached along different move orders appears once.
    """
    parts = p.parts
    if not parts:
        return GenericGame(frozenset([EMPTY_POS]), {EMPTY_POS: frozenset()}, EMPTY_POS)
    positions: set = {EMPTY_POS}
    moves: dict = {EMPTY_POS: frozenset()}
    nrows = len(parts)
    for i in range(nrows):
        for j in range(parts[i]):
            down = (i + 1, j) if i + 1 < nrows and parts[i + 1] > j else EMPTY_POS
            right = (i, j + 1) if j + 1 < parts[i] else EMPTY_POS
            positions.add((i, j))
            moves[(i, j)] = frozenset({down, right})
    return GenericGame(frozenset(positions), moves, (0, 0))


def downright_game_graph(p: Partition) -> GenericGame:
    """Deduplicated position graph of the restricted-rook game."""
    parts = p.parts
    if not parts:
        raise EmptyBoard("Downright is not played on the empty diagram")
    positions: set = set()
    moves: dict = {}
    nrows = len(parts)
    for i in range(nrows):
        for j in range(parts[i]):
            dests = set()
            if i + 1 < nrows and parts[i + 1] > j:
                dests.add((i + 1, j))
            if j + 1 < parts[i]:
                dests.add((i, j + 1))
            positions.add((i, j))
            moves[(i, j)] = frozenset(dests)
    return GenericGame(frozenset(positions), moves, (0, 0))


def truncate(g: GenericGame) -> GenericGame:
    """Remove every move into a terminal position, then drop unreachable positions.

    The start is preserved; raises StartIsTerminal when the start itself has
    no moves, since the truncated game would have no positions at all.
    """
    terminals = g.terminals()
    if g.start in terminals:
        raise StartIsTerminal("cannot truncate a game whose start position is terminal")
    pruned = {pos: frozenset(d for d in dests if d not in terminals) for pos, dests in g.moves.items()}
    reachable = {g.start}
    frontier = [g.start]
    while frontier:
        pos = frontier.pop()
        for dest in pruned[pos]:
            if dest not in reachable:
                reachable.add(dest)
                frontier.append(dest)
    return GenericGame(
        frozenset(reachable),
        {pos: pruned[pos] for pos in reachable},
        g.start,
    )


def generic_pn(g: GenericGame, convention: PlayConvention) -> dict:
    """Backward-induction P/N classes for every position of a finite acyclic game."""
    terminal_class = Outcome.P if convention is PlayConvention.NORMAL else Outcome.N
    out: dict = {}
    # Explicit post-order stack: position chains can exceed the recursion limit.
    for root in g.positions:
        pending = [root]
        while pending:
            cur = pending[-1]
            if cur in out:
                pending.pop()
                continue
            missing = [d for d in g.moves[cur] if d not in out]
            if missing:
                pending.extend(missing)
                continue
            dests = g.moves[cur]
            if not dests:
                out[cur] = terminal_class
            else:
                out[cur] = Outcome.N if any(out[d] is Outcome.P for d in dests) else Outcome.P
            pending.pop()
    return out
