"""Move legality, optimal advice, sessions, and engine soundness."""

import random

import pytest

from lctr import (
    EmptyBoard,
    Game,
    IllegalMove,
    Move,
    Outcome,
    Partition,
    SessionFinished,
    Side,
    TerminalPosition,
    apply_move,
    best_moves,
    engine_choice,
    legal_moves,
    new_session,
    oracle_misere_pn,
    outcome,
    parse_partition,
    staircase,
)
from lctr.engine import engine_move, move_target
from helpers import engine_wins_every_line, partitions_upto, random_partition

ALL_GAMES = (Game.LCTR, Game.DOWNRIGHT, Game.LCTR_MISERE)


def test_legal_moves_examples():
    assert legal_moves(Game.LCTR, Partition((1,)).view()) == [Move.TOP_ROW, Move.LEFT_COLUMN]
    assert legal_moves(Game.DOWNRIGHT, Partition((1,)).view()) == []
    assert legal_moves(Game.DOWNRIGHT, parse_partition("3,1").view()) == [Move.TOP_ROW, Move.LEFT_COLUMN]
    assert legal_moves(Game.LCTR, Partition().view()) == []
    assert legal_moves(Game.DOWNRIGHT, parse_partition("3").view()) == [Move.LEFT_COLUMN]
    assert legal_moves(Game.DOWNRIGHT, parse_partition("1,1").view()) == [Move.TOP_ROW]


def test_move_target_offsets():
    v = staircase(3).view()
    assert (move_target(v, Move.TOP_ROW).i, move_target(v, Move.TOP_ROW).j) == (1, 0)
    assert (move_target(v, Move.LEFT_COLUMN).i, move_target(v, Move.LEFT_COLUMN).j) == (0, 1)


def test_best_moves_from_winning_position():
    advice = best_moves(Game.LCTR, staircase(5).view())
    assert advice.winning and advice.moves
    for move in advice.moves:
        assert outcome(Game.LCTR, move_target(staircase(5).view(), move)) is Outcome.P


def test_best_moves_from_lost_position_flags_losing():
    advice = best_moves(Game.LCTR, staircase(4).view())
    assert not advice.winning
    assert set(advice.moves) == {Move.TOP_ROW, Move.LEFT_COLUMN}


def test_best_moves_misere_cross_checked_against_pn_grid():
    board = parse_partition("2,2")
    advice = best_moves(Game.LCTR_MISERE, board.view())
    pn = oracle_misere_pn(board)
    for move in Move:
        child = move_target(board.view(), move)
        child_class = pn.value(child.i, child.j)
        assert (move in advice.moves and advice.winning) == (child_class is Outcome.P)


def test_best_moves_raises_on_terminal():
    with pytest.raises(TerminalPosition):
        best_moves(Game.LCTR, Partition().view())
    with pytest.raises(TerminalPosition):
        best_moves(Game.DOWNRIGHT, Partition((1,)).view())


def test_advice_is_winning_exactly_on_n_positions():
    for p in partitions_upto(8):
        for game in ALL_GAMES:
            if not p and game is Game.DOWNRIGHT:
                continue
            if not legal_moves(game, p.view()):
                continue
            advice = best_moves(game, p.view())
            assert advice.winning == (outcome(game, p.view()) is Outcome.N), (game, p)


def test_engine_choice_prefers_top_row():
    # staircase(5) is winning and both replies stay winning targets? pick deterministically
    board = staircase(5)
    advice = best_moves(Game.LCTR, board.view())
    choice = engine_choice(Game.LCTR, board.view())
    assert choice == advice.moves[0]


# --- sessions ---------------------------------------------------------------------


def test_session_last_move_wins_normal_play():
    session = new_session(Game.LCTR, Partition((1,)))
    apply_move(session, Move.TOP_ROW)
    assert session.finished and session.winner is Side.HUMAN
    assert session.history == [Move.TOP_ROW]
    assert (session.i, session.j) == (1, 0)


def test_session_last_move_loses_misere():
    session = new_session(Game.LCTR_MISERE, Partition((1,)))
    apply_move(session, Move.TOP_ROW)
    assert session.finished and session.winner is Side.ENGINE


def test_session_downright_single_move_reaches_the_corner():
    # From (2,1) either move lands on the terminal single box.
    session = new_session(Game.DOWNRIGHT, parse_partition("2,1"))
    apply_move(session, Move.LEFT_COLUMN)
    assert (session.i, session.j) == (0, 1)
    assert session.finished and session.winner is Side.HUMAN


def test_session_downright_wider_board_continues():
    session = new_session(Game.DOWNRIGHT, parse_partition("2,2"))
    apply_move(session, Move.LEFT_COLUMN)
    assert (session.i, session.j) == (0, 1)
    assert not session.finished
    assert session.to_move is Side.ENGINE


def test_session_rejects_illegal_and_finished_moves():
    session = new_session(Game.DOWNRIGHT, parse_partition("1,1"))
    with pytest.raises(IllegalMove):
        apply_move(session, Move.LEFT_COLUMN)
    apply_move(session, Move.TOP_ROW)
    assert session.finished
    with pytest.raises(SessionFinished):
        apply_move(session, Move.TOP_ROW)
    with pytest.raises(SessionFinished):
        engine_move(session)


def test_session_on_terminal_start():
    session = new_session(Game.LCTR, Partition())
    assert session.finished and session.winner is Side.ENGINE
    misere = new_session(Game.LCTR_MISERE, Partition())
    assert misere.finished and misere.winner is Side.HUMAN
    with pytest.raises(EmptyBoard):
        new_session(Game.DOWNRIGHT, Partition())


def test_session_replay_invariant():
    rng = random.Random(7)
    for _ in range(50):
        base = random_partition(rng, max_parts=6, max_boxes=30, width_cap=6)
        game = rng.choice(ALL_GAMES)
        if game is Game.DOWNRIGHT and not base:
            continue
        session = new_session(game, base)
        while not session.finished:
            move = rng.choice(session.legal_moves())
            apply_move(session, move)
        assert session.i == sum(1 for m in session.history if m is Move.TOP_ROW)
        assert session.j == sum(1 for m in session.history if m is Move.LEFT_COLUMN)


# --- soundness ----------------------------------------------------------------------


def test_engine_wins_from_n_positions_exhaustively():
    for p in partitions_upto(6):
        for game in ALL_GAMES:
            if not p and game is Game.DOWNRIGHT:
                continue
            if outcome(game, p.view()) is Outcome.N and legal_moves(game, p.view()):
                assert engine_wins_every_line(game, p.view()), (game, p)


def test_engine_wins_on_random_lines_of_larger_boards():
    # boards with 9..12 boxes, beyond the exhaustive sweep
    rng = random.Random(42)
    boards = []
    while len(boards) < 30:
        candidate = random_partition(rng, max_parts=5, max_boxes=12, width_cap=5)
        if 8 < candidate.n <= 12:
            boards.append(candidate)
    for base in boards:
        for game in ALL_GAMES:
            if not base and game is Game.DOWNRIGHT:
                continue
            if not legal_moves(game, base.view()) or outcome(game, base.view()) is not Outcome.N:
                continue
            session = new_session(game, base, human_first=False)
            while not session.finished:
                if session.to_move is Side.ENGINE:
                    engine_move(session)
                else:
                    apply_move(session, rng.choice(session.legal_moves()))
            assert session.winner is Side.ENGINE, (game, base)
