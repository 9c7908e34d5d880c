"""Shared test utilities: small-scale independent oracles and generators.

The explicit-tree census here deliberately re-derives everything from the
move rules by materializing row tuples, so it shares no code with the
package's path-count DP.
"""

from __future__ import annotations

import math
from typing import Iterator

from lctr import Game, Partition, iter_partitions
from lctr.analytics import TreeCensus
from lctr.engine import engine_choice, legal_moves, move_target


def partitions_upto(max_n: int) -> Iterator[Partition]:
    for n in range(max_n + 1):
        yield from iter_partitions(n)


def _children(game: Game, sub: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    """Child row tuples per the move rules; None when terminal."""
    if game is Game.DOWNRIGHT:
        if sub == (1,):
            return None
        out = []
        if len(sub) > 1:
            out.append(sub[1:])
        if sub[0] > 1:
            out.append(tuple(x - 1 for x in sub if x > 1))
        return out
    if not sub:
        return None
    return [sub[1:], tuple(x - 1 for x in sub if x > 1)]


def explicit_tree_census(game: Game, p: Partition) -> TreeCensus:
    """Walk the full unfolded game tree recursively (exponential; tiny n only)."""
    nodes = 0
    leaves = 0
    states: set[tuple[int, ...]] = set()

    def walk(sub: tuple[int, ...]) -> None:
        nonlocal nodes, leaves
        nodes += 1
        states.add(sub)
        children = _children(game, sub)
        if children is None:
            leaves += 1
            return
        for child in children:
            walk(child)

    walk(tuple(p.parts))
    return TreeCensus(nodes, leaves, len(states))


def tree_canon(game: Game, sub: tuple[int, ...], memo: dict) -> str:
    """Canonical string of the unordered game tree rooted at a board."""
    cached = memo.get(sub)
    if cached is not None:
        return cached
    children = _children(game, sub)
    if children is None:
        canon = "*"
    else:
        canon = "(" + "".join(sorted(tree_canon(game, c, memo) for c in children)) + ")"
    memo[sub] = canon
    return canon


def isomorphism_state_count(game: Game, p: Partition) -> int:
    """Number of reachable positions counted up to game-tree isomorphism."""
    memo: dict = {}
    seen: set[tuple[int, ...]] = set()

    def walk(sub: tuple[int, ...]) -> None:
        if sub in seen:
            return
        seen.add(sub)
        for child in _children(game, sub) or []:
            walk(child)

    walk(tuple(p.parts))
    return len({tree_canon(game, sub, memo) for sub in seen})


def engine_wins_every_line(game: Game, view, engine_to_move: bool = True) -> bool:
    """Play the engine against an adversary that tries every reply."""
    moves = legal_moves(game, view)
    if not moves:
        # The side to move is stuck: it loses under normal play, wins under misère.
        stuck_is_engine = engine_to_move
        if game is Game.LCTR_MISERE:
            return stuck_is_engine
        return not stuck_is_engine
    if engine_to_move:
        move = engine_choice(game, view)
        return engine_wins_every_line(game, move_target(view, move), False)
    return all(engine_wins_every_line(game, move_target(view, m), True) for m in moves)


def random_partition(rng, max_parts: int = 100_000, max_boxes: int = 1_000_000, width_cap: int = 1000, rows: int | None = None) -> Partition:
    """A random board with log-uniform row count and bounded box total."""
    r = rows if rows is not None else int(10 ** (rng.random() * math.log10(max_parts)))
    r = max(1, min(r, max_parts))
    width = max(1, min(width_cap, max_boxes // r))
    return Partition(sorted((rng.randint(1, width) for _ in range(r)), reverse=True))
