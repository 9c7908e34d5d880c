"""Logarithmic-time game values for LCTR and Downright boards.

The whole-board value is recovered from a constant number of closed-form
subgames anchored at the diagram's Durfee square:

* Downright values repeat along the main diagonal, so the board collapses
  to the hook-shaped subgame at the far end of the diagonal.
* LCTR values of boards with a Durfee square of side >= 3 equal the value
  at the diagonal offset that leaves a side-3 square; that small board is
  folded out of six one/two/three-row boundary subgames with a fixed
  sequence of mex steps.

Every row access goes through a view probe, so an evaluation on an r-row
board costs O(log r) probes, against the O(n) box updates of the grid
reference in ``oracle``.
"""

from __future__ import annotations

from enum import Enum

from .errors import EmptyBoard, InvalidFamilyParam, InvalidShape
from .oracle import Outcome
from .partition import Partition, ProbeCounter, SubpositionView


class Game(Enum):
    """Playable configurations: which move rules and which win condition."""

    LCTR = "lctr"
    DOWNRIGHT = "downright"
    LCTR_MISERE = "lctr-misere"

    @classmethod
    def from_wire(cls, text: str) -> "Game":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown game {text!r}; expected one of " + ", ".join(m.value for m in cls))


def mex2(a: int | None = None, b: int | None = None) -> int:
    """Minimum excluded value over up to two child values (None = no such move)."""
    v = 0
    while v == a or v == b:
        v += 1
    return v


def sg_one_row(c: int) -> int:
    """Value of a single-row LCTR board of width c: 0 empty, 1 odd, 2 even."""
    if c <= 0:
        return 0
    return 1 if c % 2 == 1 else 2


def sg_two_row(l1: int, l2: int) -> int:
    """Value of a two-row LCTR board.

    Equal rows alternate 0/2 with the parity of the width; unequal rows
    alternate 0/1 with the parity of the short row.
    """
    if l1 < l2 or l2 < 1:
        raise InvalidShape(f"need l1 >= l2 >= 1, got ({l1}, {l2})")
    if l1 == l2:
        return 0 if l1 % 2 == 0 else 2
    return 0 if l2 % 2 == 1 else 1


def sg_three_row(l1: int, l2: int, l3: int) -> int:
    """Value of a three-row LCTR board, dispatched on row equalities."""
    if l1 < l2 or l2 < l3 or l3 < 1:
        raise InvalidShape(f"need l1 >= l2 >= l3 >= 1, got ({l1}, {l2}, {l3})")
    if l1 == l2 == l3:
        if l3 >= 3 and l3 % 2 == 1:
            return 0
        if l3 == 2:
            return 2
        return 1  # width 1, or even width >= 4
    if l2 == l3:  # l1 > l2 = l3
        return 0 if l3 % 2 == 1 else 1
    if l1 == l2:  # l1 = l2 > l3
        return 0 if l3 % 2 == 0 else 1
    if l3 == 1:  # l1 > l2 > l3 = 1
        return 1 if l2 % 2 == 0 else 2
    return 0 if l3 % 2 == 0 else 1  # l1 > l2 > l3 > 1


def _sg_rows(entries: tuple[int, ...]) -> int:
    """Value of a small LCTR board given as non-increasing row lengths.

    Non-positive trailing entries are dropped, so degenerate boundary
    remainders collapse to shorter boards or the empty one.
    """
    rows = tuple(e for e in entries if e > 0)
    if not rows:
        return 0
    if len(rows) == 1:
        return sg_one_row(rows[0])
    if len(rows) == 2:
        return sg_two_row(rows[0], rows[1])
    return sg_three_row(rows[0], rows[1], rows[2])


def sg_gamma(game: Game, r: int, c: int) -> int:
    """Value of the hook board with r rows and first-row width c."""
    if r < 1 or c < 1:
        raise InvalidFamilyParam(f"hook needs r, c >= 1, got ({r}, {c})")
    if game is Game.LCTR:
        if c > 1 and r > 1:
            return 0
        if (r == 1 and c % 2 == 1) or (c == 1 and r % 2 == 1):
            return 1
        return 2
    if game is Game.DOWNRIGHT:
        if c % 2 == 1 and r % 2 == 1:
            return 0
        if c % 2 != r % 2 and c > 1 and r > 1:
            return 2
        return 1
    raise ValueError(f"no single hook value for {game}")


def sg_rectangle(r: int, c: int) -> int:
    """LCTR value of the r-by-c rectangle board."""
    if r < 1 or c < 1:
        raise InvalidFamilyParam(f"rectangle needs r, c >= 1, got ({r}, {c})")
    if c > 1 and r > 1 and (c + r) % 2 == 0:
        return 0
    if (c <= 2 or r <= 2) and (c + r) % 2 == 1:
        return 2
    return 1


def _as_view(board: Partition | SubpositionView) -> SubpositionView:
    return board.view() if isinstance(board, Partition) else board


def sg_downright(board: Partition | SubpositionView, counter: ProbeCounter | None = None) -> int:
    """Downright value of a nonempty board in O(log rows) probes.

    The value equals that of the hook-shaped subgame at the end of the main
    diagonal, whose dimensions come from one row probe and one column
    binary search.
    """
    v = _as_view(board)
    d = v.durfee(counter)
    if d == 0:
        raise EmptyBoard("Downright is not played on the empty diagram")
    c = v.part_at(d - 1, counter) - (d - 1)
    r = v.column_length(d - 1, counter) - (d - 1)
    return sg_gamma(Game.DOWNRIGHT, r, c)


def sg_lctr(board: Partition | SubpositionView, counter: ProbeCounter | None = None) -> int:
    """LCTR value of any board in O(log rows) probes.

    Dispatch on the Durfee length d: 0 is the empty board, 1 is a hook,
    2 folds four boundary values, and d >= 3 first shifts (d-3, d-3) down
    the diagonal (where the value provably repeats) and then folds six
    boundary values through the fixed mex network below.
    """
    v = _as_view(board)
    d = v.durfee(counter)
    if d == 0:
        return 0
    if d == 1:
        return sg_gamma(Game.LCTR, v.column_length(0, counter), v.part_at(0, counter))
    if d == 2:
        l1 = v.part_at(0, counter)
        l2 = v.part_at(1, counter)
        rows = v.column_length(0, counter)
        col2 = v.column_length(1, counter)
        a02 = _sg_rows((l1 - 2, l2 - 2))
        a12 = _sg_rows((l2 - 2,))
        a20 = _sg_rows((rows - 2, col2 - 2))
        a21 = _sg_rows((col2 - 2,))
        m11 = mex2(a21, a12)
        m01 = mex2(a02, m11)
        m10 = mex2(a20, m11)
        return mex2(m01, m10)
    # d >= 3: rows of the shifted board read as part_at(s + k) - s.
    s = d - 3
    b1 = v.part_at(s, counter) - s
    b2 = v.part_at(s + 1, counter) - s
    b3 = v.part_at(s + 2, counter) - s
    rows = v.column_length(s, counter) - s
    col2 = v.column_length(s + 1, counter) - s
    col3 = v.column_length(s + 2, counter) - s
    a03 = _sg_rows((b1 - 3, b2 - 3, b3 - 3))
    a13 = _sg_rows((b2 - 3, b3 - 3))
    a23 = _sg_rows((b3 - 3,))
    a30 = _sg_rows((rows - 3, col2 - 3, col3 - 3))
    a31 = _sg_rows((col2 - 3, col3 - 3))
    a32 = _sg_rows((col3 - 3,))
    m22 = mex2(a23, a32)
    m21 = mex2(m22, a31)
    m20 = mex2(m21, a30)
    m12 = mex2(a13, m22)
    m11 = mex2(m12, m21)
    m10 = mex2(m11, m20)
    m02 = mex2(a03, m12)
    m01 = mex2(m02, m11)
    return mex2(m01, m10)


def sg_value(game: Game, board: Partition | SubpositionView, counter: ProbeCounter | None = None) -> int:
    """Value under normal play for the given game; misère has no single value."""
    if game is Game.LCTR:
        return sg_lctr(board, counter)
    if game is Game.DOWNRIGHT:
        return sg_downright(board, counter)
    raise ValueError("misère LCTR is classified by outcome(), not by a game value")


def outcome(game: Game, board: Partition | SubpositionView, counter: ProbeCounter | None = None) -> Outcome:
    """P/N classification of a board under the given game and win condition."""
    v = _as_view(board)
    if game is Game.LCTR:
        return Outcome.P if sg_lctr(v, counter) == 0 else Outcome.N
    if game is Game.DOWNRIGHT:
        return Outcome.P if sg_downright(v, counter) == 0 else Outcome.N
    # Misère LCTR: the empty board means the previous player just lost.
    if v.is_empty(counter):
        return Outcome.N
    return Outcome.P if sg_downright(v, counter) == 0 else Outcome.N
