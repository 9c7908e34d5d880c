"""HTTP JSON service: interactive play sessions, evaluation, and grid dumps.

Endpoints (all JSON unless noted):

* ``POST /games`` ``{partition, game, human_first}`` -> 201 ``{id, state}``
* ``GET /games/{id}`` -> state
* ``POST /games/{id}/moves`` ``{kind}`` -> state after the human move
* ``POST /games/{id}/engine-move`` -> ``{move, state}``
* ``GET /eval?partition=&game=`` -> value/outcome plus advised moves
* ``GET /eval/grid?partition=&game=`` -> text grid, one diagram row per line

Sessions live in memory, are evicted after 24 idle hours, and mutate under
a per-session lock so concurrent moves serialize; the loser of a race gets
a wrong-turn or illegal-move conflict.
"""

from __future__ import annotations

import json
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .engine import Move, Side, apply_move, best_moves, engine_move, legal_moves, new_session
from .errors import (
    BudgetExceeded,
    EmptyBoard,
    GameError,
    IllegalMove,
    NotAPartition,
    ParseError,
    SessionFinished,
    TerminalPosition,
)
from .oracle import oracle_misere_pn, oracle_sg_downright, oracle_sg_lctr
from .partition import Partition, format_partition, parse_partition
from .solver import Game, outcome, sg_value

SESSION_IDLE_SECONDS = 24 * 60 * 60
GRID_BOX_LIMIT = 10_000


class _Entry:
    __slots__ = ("session", "lock", "last_access")

    def __init__(self, session):
        self.session = session
        self.lock = threading.Lock()
        self.last_access = time.monotonic()


class SessionStore:
    """Thread-safe in-memory session registry with idle eviction."""

    def __init__(self, idle_seconds: float = SESSION_IDLE_SECONDS):
        self._entries: dict[str, _Entry] = {}
        self._lock = threading.Lock()
        self._idle = idle_seconds

    def add(self, session) -> None:
        now = time.monotonic()
        with self._lock:
            stale = [sid for sid, e in self._entries.items() if now - e.last_access > self._idle]
            for sid in stale:
                del self._entries[sid]
            self._entries[session.id] = _Entry(session)

    def get(self, session_id: str) -> _Entry:
        with self._lock:
            entry = self._entries.get(session_id)
            if entry is None:
                raise KeyError(session_id)
            entry.last_access = time.monotonic()
            return entry


def session_state(session) -> dict:
    """Wire form of a session: current subboard plus turn/outcome bookkeeping."""
    sub = session.view.materialize()
    return {
        "id": session.id,
        "game": session.game.value,
        "base_partition": format_partition(session.base),
        "partition": format_partition(sub),
        "rows": list(sub.parts),
        "offsets": [session.i, session.j],
        "n": sub.n,
        "legal_moves": [m.value for m in session.legal_moves()],
        "to_move": session.to_move.value,
        "finished": session.finished,
        "winner": session.winner.value if session.winner else None,
        "history": [m.value for m in session.history],
    }


def eval_position(partition_text: str, game: Game) -> dict:
    """Value/outcome plus move advice for a standalone board."""
    board = parse_partition(partition_text)
    result: dict = {
        "game": game.value,
        "partition": format_partition(board),
        "rows": list(board.parts),
        "outcome": outcome(game, board).value,
    }
    if game is not Game.LCTR_MISERE:
        result["sg"] = sg_value(game, board)
    if legal_moves(game, board.view()):
        advice = best_moves(game, board.view())
        result["best_moves"] = [m.value for m in advice.moves]
        result["winning"] = advice.winning
    else:
        result["best_moves"] = []
        result["winning"] = False
    return result


def grid_text(partition_text: str, game: Game) -> str:
    """Reference grid for the UI overlay: digits, or P/N letters for misère."""
    board = parse_partition(partition_text)
    if board.n > GRID_BOX_LIMIT:
        raise BudgetExceeded(f"{board.n} boxes exceed the grid limit of {GRID_BOX_LIMIT}")
    if game is Game.LCTR:
        return oracle_sg_lctr(board).dump()
    if game is Game.DOWNRIGHT:
        return oracle_sg_downright(board).dump()
    return oracle_misere_pn(board).dump()


class ApiHandler(BaseHTTPRequestHandler):
    """Request handler; the owning server supplies ``store`` and ``ui_dir``."""

    server_version = "lctr-games/0.1"
    protocol_version = "HTTP/1.1"

    # --- plumbing -----------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default; tests capture stdout
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _json(self, status: int, obj) -> None:
        self._send(status, json.dumps(obj).encode(), "application/json")

    def _error(self, status: int, code: str, message: str) -> None:
        self._json(status, {"error": code, "message": message})

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        obj = json.loads(raw)
        if not isinstance(obj, dict):
            raise ValueError("body must be a JSON object")
        return obj

    # --- routing ------------------------------------------------------------

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        try:
            if parts == ["eval"]:
                return self._handle_eval(url)
            if parts == ["eval", "grid"]:
                return self._handle_grid(url)
            if len(parts) == 2 and parts[0] == "games":
                return self._handle_get_game(parts[1])
            return self._handle_static(url.path)
        except Exception as exc:  # pragma: no cover - last-resort guard
            self._error(500, "internal", str(exc))

    def do_POST(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        try:
            body = self._read_json()
        except (ValueError, json.JSONDecodeError) as exc:
            return self._error(400, "malformed", f"bad JSON body: {exc}")
        try:
            if parts == ["games"]:
                return self._handle_create(body)
            if len(parts) == 3 and parts[0] == "games" and parts[2] == "moves":
                return self._handle_human_move(parts[1], body)
            if len(parts) == 3 and parts[0] == "games" and parts[2] == "engine-move":
                return self._handle_engine_move(parts[1])
            return self._error(404, "not_found", f"no such endpoint {url.path}")
        except Exception as exc:  # pragma: no cover
            self._error(500, "internal", str(exc))

    # --- endpoint bodies ------------------------------------------------------

    def _parse_game(self, text) -> Game | None:
        try:
            return Game.from_wire(text)
        except (ValueError, TypeError):
            self._error(400, "malformed", f"unknown game {text!r}")
            return None

    def _handle_create(self, body: dict) -> None:
        game = self._parse_game(body.get("game", "lctr"))
        if game is None:
            return
        partition_text = body.get("partition", "")
        if not isinstance(partition_text, str):
            return self._error(400, "malformed", "partition must be a string")
        try:
            board = parse_partition(partition_text)
        except (ParseError, NotAPartition) as exc:
            return self._error(422, "unparseable_partition", str(exc))
        human_first = body.get("human_first", True)
        if not isinstance(human_first, bool):
            return self._error(400, "malformed", "human_first must be a boolean")
        try:
            session = new_session(game, board, human_first=human_first)
        except EmptyBoard as exc:
            return self._error(400, "empty_board", str(exc))
        self.server.store.add(session)
        self._json(201, {"id": session.id, "state": session_state(session)})

    def _get_entry(self, session_id: str) -> _Entry | None:
        try:
            return self.server.store.get(session_id)
        except KeyError:
            self._error(404, "unknown_session", f"no session {session_id}")
            return None

    def _handle_get_game(self, session_id: str) -> None:
        entry = self._get_entry(session_id)
        if entry is None:
            return
        with entry.lock:
            self._json(200, session_state(entry.session))

    def _handle_human_move(self, session_id: str, body: dict) -> None:
        entry = self._get_entry(session_id)
        if entry is None:
            return
        try:
            move = Move.from_wire(body.get("kind"))
        except (ValueError, TypeError):
            return self._error(400, "malformed", f"unknown move kind {body.get('kind')!r}")
        with entry.lock:
            session = entry.session
            if session.finished:
                return self._error(409, "finished", "session is finished")
            if session.to_move is not Side.HUMAN:
                return self._error(409, "wrong_turn", "engine to move")
            try:
                apply_move(session, move)
            except IllegalMove as exc:
                return self._error(409, "illegal_move", str(exc))
            except SessionFinished as exc:
                return self._error(409, "finished", str(exc))
            self._json(200, session_state(session))

    def _handle_engine_move(self, session_id: str) -> None:
        entry = self._get_entry(session_id)
        if entry is None:
            return
        with entry.lock:
            session = entry.session
            if session.finished:
                return self._error(409, "finished", "session is finished")
            if session.to_move is not Side.ENGINE:
                return self._error(409, "wrong_turn", "human to move")
            try:
                move = engine_move(session)
            except SessionFinished as exc:
                return self._error(409, "finished", str(exc))
            self._json(200, {"move": move.value, "state": session_state(session)})

    def _query(self, url) -> tuple[str, Game | None]:
        params = parse_qs(url.query)
        partition_text = params.get("partition", [""])[0]
        game = self._parse_game(params.get("game", ["lctr"])[0])
        return partition_text, game

    def _handle_eval(self, url) -> None:
        partition_text, game = self._query(url)
        if game is None:
            return
        try:
            self._json(200, eval_position(partition_text, game))
        except (ParseError, NotAPartition) as exc:
            self._error(422, "unparseable_partition", str(exc))
        except EmptyBoard as exc:
            self._error(400, "empty_board", str(exc))

    def _handle_grid(self, url) -> None:
        partition_text, game = self._query(url)
        if game is None:
            return
        try:
            text = grid_text(partition_text, game)
        except (ParseError, NotAPartition) as exc:
            return self._error(422, "unparseable_partition", str(exc))
        except EmptyBoard as exc:
            return self._error(400, "empty_board", str(exc))
        except BudgetExceeded as exc:
            return self._error(400, "budget_exceeded", str(exc))
        self._send(200, text.encode(), "text/plain; charset=utf-8")

    # --- optional static UI ----------------------------------------------------

    def _handle_static(self, path: str) -> None:
        ui_dir = getattr(self.server, "ui_dir", None)
        if ui_dir is None:
            return self._error(404, "not_found", f"no such endpoint {path}")
        rel = path.lstrip("/") or "index.html"
        target = (ui_dir / rel).resolve()
        if not str(target).startswith(str(ui_dir.resolve())) or not target.is_file():
            return self._error(404, "not_found", f"no such file {path}")
        content_type = {
            ".html": "text/html; charset=utf-8",
            ".js": "text/javascript; charset=utf-8",
            ".css": "text/css; charset=utf-8",
            ".svg": "image/svg+xml",
            ".map": "application/json",
        }.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), content_type)


def create_server(host: str = "127.0.0.1", port: int = 0, ui_dir: str | Path | None = None, verbose: bool = False) -> ThreadingHTTPServer:
    """Build the threaded HTTP server; ``port=0`` picks a free port."""
    server = ThreadingHTTPServer((host, port), ApiHandler)
    server.store = SessionStore()
    server.ui_dir = Path(ui_dir) if ui_dir is not None else None
    server.verbose = verbose
    return server
