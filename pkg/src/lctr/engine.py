"""Optimal-move selection and live game sessions for human-vs-engine play."""

from __future__ import annotations

import secrets
from dataclasses import dataclass, field
from enum import Enum

from .errors import EmptyBoard, IllegalMove, SessionFinished, TerminalPosition
from .oracle import Outcome
from .partition import Partition, SubpositionView
from .solver import Game, outcome


class Move(Enum):
    TOP_ROW = "top_row"
    LEFT_COLUMN = "left_column"

    @classmethod
    def from_wire(cls, text: str) -> "Move":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown move {text!r}")


class Side(Enum):
    HUMAN = "human"
    ENGINE = "engine"

    def other(self) -> "Side":
        return Side.ENGINE if self is Side.HUMAN else Side.HUMAN


def legal_moves(game: Game, view: SubpositionView) -> list[Move]:
    """Moves available from a position; empty exactly at the game's terminals.

    LCTR (either win condition) allows both moves from any nonempty board.
    Downright needs a second row to move down and a second column to move
    right, so the single box has no moves.
    """
    first = view.part_at(0)
    if first == 0:
        return []
    if game is Game.DOWNRIGHT:
        moves = []
        if view.part_at(1) > 0:
            moves.append(Move.TOP_ROW)
        if first >= 2:
            moves.append(Move.LEFT_COLUMN)
        return moves
    return [Move.TOP_ROW, Move.LEFT_COLUMN]


def move_target(view: SubpositionView, move: Move) -> SubpositionView:
    """The view after playing a move: one row or one column deeper."""
    return view.shift(1, 0) if move is Move.TOP_ROW else view.shift(0, 1)


@dataclass(frozen=True)
class MoveAdvice:
    """Engine advice: the winning moves, or all moves flagged as losing."""

    winning: bool
    moves: tuple[Move, ...]


def best_moves(game: Game, view: SubpositionView) -> MoveAdvice:
    """All moves that hand the opponent a P position.

    When no such move exists (the current position is already P), every
    legal move is returned with ``winning=False``.
    """
    legal = legal_moves(game, view)
    if not legal:
        raise TerminalPosition("no moves from a terminal position")
    winning = tuple(m for m in legal if outcome(game, move_target(view, m)) is Outcome.P)
    if winning:
        return MoveAdvice(True, winning)
    return MoveAdvice(False, tuple(legal))


def engine_choice(game: Game, view: SubpositionView) -> Move:
    """The engine's deterministic pick.

    Winning moves are preferred in the fixed order top row, then left
    column, so transcripts are reproducible.  From a lost position the
    engine drags the game out by maximizing the opponent's remaining
    rows + columns.
    """
    advice = best_moves(game, view)
    if advice.winning:
        return advice.moves[0]

    def remaining(move: Move) -> int:
        child = move_target(view, move)
        return child.row_count() + child.part_at(0)

    return max(advice.moves, key=remaining)  # ties keep the earlier (top-row) move


@dataclass
class GameSession:
    """One live game: a base board, the current offsets, and whose turn it is.

    The offsets are reproducible by replaying ``history`` from the base
    board: each top-row move adds (1, 0), each left-column move (0, 1).
    """

    id: str
    game: Game
    base: Partition
    i: int = 0
    j: int = 0
    to_move: Side = Side.HUMAN
    history: list[Move] = field(default_factory=list)
    finished: bool = False
    winner: Side | None = None

    @property
    def view(self) -> SubpositionView:
        return SubpositionView(self.base, self.i, self.j)

    def legal_moves(self) -> list[Move]:
        return [] if self.finished else legal_moves(self.game, self.view)


def new_session(game: Game, base: Partition, human_first: bool = True, session_id: str | None = None) -> GameSession:
    """Open a session; raises EmptyBoard for Downright on the empty diagram.

    A board that is already terminal yields a finished session: under
    normal play the side to move has lost, under misère it has won.
    """
    if game is Game.DOWNRIGHT and not base:
        raise EmptyBoard("Downright is not played on the empty diagram")
    session = GameSession(
        id=session_id if session_id is not None else secrets.token_hex(16),
        game=game,
        base=base,
        to_move=Side.HUMAN if human_first else Side.ENGINE,
    )
    if not legal_moves(game, session.view):
        session.finished = True
        stuck = session.to_move
        session.winner = stuck if game is Game.LCTR_MISERE else stuck.other()
    return session


def apply_move(session: GameSession, move: Move) -> GameSession:
    """Play a move for the side to move, updating turn, finish flag, and winner.

    The mover reaching a terminal position wins under normal play and loses
    under misère.
    """
    if session.finished:
        raise SessionFinished(f"session {session.id} is finished")
    if move not in legal_moves(session.game, session.view):
        raise IllegalMove(f"{move.value} is not legal here")
    mover = session.to_move
    if move is Move.TOP_ROW:
        session.i += 1
    else:
        session.j += 1
    session.history.append(move)
    session.to_move = mover.other()
    if not legal_moves(session.game, session.view):
        session.finished = True
        session.winner = mover.other() if session.game is Game.LCTR_MISERE else mover
    return session


def engine_move(session: GameSession) -> Move:
    """Pick and play the engine's move on a session."""
    if session.finished:
        raise SessionFinished(f"session {session.id} is finished")
    move = engine_choice(session.game, session.view)
    apply_move(session, move)
    return move
