"""Solvers, analytics, and a play service for LCTR and Downright on Young diagrams."""

from .analytics import TreeCensus, census, census_closed_form, state_space_bounds
from .engine import GameSession, Move, MoveAdvice, Side, apply_move, best_moves, engine_choice, legal_moves, new_session
from .errors import (
    BudgetExceeded,
    EmptyBoard,
    GameError,
    IllegalMove,
    InvalidFamilyParam,
    InvalidShape,
    NotAPartition,
    ParseError,
    SessionFinished,
    StartIsTerminal,
    TerminalPosition,
)
from .oracle import (
    GenericGame,
    Outcome,
    PlayConvention,
    PnGrid,
    SgGrid,
    downright_game_graph,
    generic_pn,
    lctr_game_graph,
    oracle_misere_pn,
    oracle_sg_downright,
    oracle_sg_lctr,
    truncate,
)
from .partition import (
    FamilyKind,
    FamilySpec,
    Partition,
    ProbeCounter,
    SubpositionView,
    format_partition,
    gamma,
    iter_partitions,
    make_family,
    parse_partition,
    rectangle,
    staircase,
)
from .solver import Game, mex2, outcome, sg_downright, sg_gamma, sg_lctr, sg_one_row, sg_rectangle, sg_three_row, sg_two_row, sg_value

__all__ = [
    "BudgetExceeded",
    "EmptyBoard",
    "FamilyKind",
    "FamilySpec",
    "Game",
    "GameError",
    "GameSession",
    "GenericGame",
    "IllegalMove",
    "InvalidFamilyParam",
    "InvalidShape",
    "Move",
    "MoveAdvice",
    "NotAPartition",
    "Outcome",
    "ParseError",
    "Partition",
    "PlayConvention",
    "PnGrid",
    "ProbeCounter",
    "SessionFinished",
    "SgGrid",
    "Side",
    "StartIsTerminal",
    "SubpositionView",
    "TerminalPosition",
    "TreeCensus",
    "apply_move",
    "best_moves",
    "census",
    "census_closed_form",
    "downright_game_graph",
    "engine_choice",
    "format_partition",
    "gamma",
    "generic_pn",
    "iter_partitions",
    "lctr_game_graph",
    "legal_moves",
    "make_family",
    "mex2",
    "new_session",
    "oracle_misere_pn",
    "oracle_sg_downright",
    "oracle_sg_lctr",
    "outcome",
    "parse_partition",
    "rectangle",
    "sg_downright",
    "sg_gamma",
    "sg_lctr",
    "sg_one_row",
    "sg_rectangle",
    "sg_three_row",
    "sg_two_row",
    "sg_value",
    "staircase",
    "state_space_bounds",
    "truncate",
]
