"""Benchmark harness contrasting the log-probe solver with the O(n) grid DP.

Wall time in Python is noisy, so the primary measurement is each solver's
own cost counter: row probes for the fast solver, box updates for the
reference DP.  On staircases the box count grows ~4x per doubling of the
row count while the probe count grows by a small additive constant.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .oracle import ORACLE_BOX_BUDGET, oracle_sg_lctr
from .partition import ProbeCounter, staircase
from .solver import sg_lctr

BENCH_CSV_HEADER = ["algorithm", "r", "n", "wall_time", "probes_or_cells"]

#: Default cap on oracle boxes per bench run; a 2^13-row staircase is ~34M
#: boxes, which already takes seconds of pure-Python DP.
DEFAULT_ORACLE_BENCH_BOXES = 2 * 10**7

MAX_EXPONENT = 26


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str  # "fast" or "oracle"
    r: int  # rows of the staircase board
    n: int  # boxes
    wall_time: float  # best-of-repetitions seconds, board construction excluded
    probes_or_cells: int  # solver probe count / DP box updates


def run_bench(
    max_exponent: int = 20,
    repetitions: int = 3,
    min_exponent: int = 10,
    oracle_max_boxes: int = DEFAULT_ORACLE_BENCH_BOXES,
) -> list[BenchRecord]:
    """Time both solvers on staircases with 2^min_exponent .. 2^max_exponent rows.

    The oracle is skipped once the box count passes ``oracle_max_boxes``
    (and always past its own hard budget).
    """
    if not 1 <= max_exponent <= MAX_EXPONENT:
        raise ValueError(f"max_exponent must be in 1..{MAX_EXPONENT}")
    if min_exponent > max_exponent:
        raise ValueError("min_exponent must not exceed max_exponent")
    reps = max(1, repetitions)
    records = []
    for k in range(min_exponent, max_exponent + 1):
        r = 2**k
        board = staircase(r)  # construction is not part of the timed region
        counter = ProbeCounter()
        sg_lctr(board, counter)
        best = min(_timed(sg_lctr, board) for _ in range(reps))
        records.append(BenchRecord("fast", r, board.n, best, counter.probes))
        if board.n <= min(oracle_max_boxes, ORACLE_BOX_BUDGET):
            cells = oracle_sg_lctr(board).cells_updated
            best = min(_timed(lambda b: oracle_sg_lctr(b), board) for _ in range(reps))
            records.append(BenchRecord("oracle", r, board.n, best, cells))
    return records


def _timed(fn, board) -> float:
    start = time.perf_counter()
    fn(board)
    return time.perf_counter() - start


def bench_csv(records: list[BenchRecord]) -> str:
    """CSV dump; only the wall_time column varies between runs."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_CSV_HEADER)
    for rec in records:
        writer.writerow([rec.algorithm, rec.r, rec.n, f"{rec.wall_time:.6f}", rec.probes_or_cells])
    return buf.getvalue()
