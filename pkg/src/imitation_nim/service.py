"""HTTP/JSON game host: play against the engine, inspect analysis overlays.

Endpoints:
    POST /api/games                 create a session
    GET  /api/games/{id}            session view
    POST /api/games/{id}/moves      play a move (engine replies in-line)
    GET  /api/games/{id}/analysis   verdict, legal/forbidden moves, overlays

Error bodies are {"code", "message"} with codes invalid_params,
illegal_amount, imitation_budget_exhausted, not_your_turn,
unknown_session.  Sessions live in memory; an optional JSON-lines log
records every accepted move for post-hoc analysis.  The engine never
touches the exhaustive solver here: classification only needs the pair
table, so large boards stay cheap.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .core import (
    DynamicState,
    GameParams,
    IllegalMoveError,
    Move,
    Position,
    apply_move,
    initial_state,
    is_imitation,
    legal_moves,
    moves_from,
)
from .strategy import (
    StaticKind,
    StaticReason,
    best_move,
    classify,
    classify_static,
    fallback_move,
)
from .wythoff import WythoffTable, table_covering

SEATS = ("first", "second")

_GRID_CODES = {
    (StaticKind.NON_DYNAMIC_P, None): "P",
    (StaticKind.NON_DYNAMIC_N, StaticReason.ROW_TRAP): "a",
    (StaticKind.NON_DYNAMIC_N, StaticReason.COLUMN_P_BELOW): "b",
    (StaticKind.NON_DYNAMIC_N, StaticReason.NO_P_BELOW): "n",
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


@dataclass
class MoveRecord:
    player: str
    move: Move
    imitation: bool


@dataclass
class GameSession:
    id: str
    params: GameParams
    initial: Position
    engine_side: str  # "none" | "first" | "second"
    state: DynamicState
    move_log: list[MoveRecord] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def to_move(self) -> str:
        return SEATS[len(self.move_log) % 2]

    def finished(self) -> bool:
        return not legal_moves(self.state, self.params)

    def winner(self) -> str | None:
        if not self.finished():
            return None
        loser = self.to_move
        return SEATS[1 - SEATS.index(loser)]

    def check_replay_integrity(self) -> None:
        """The stored state must equal the fold of the move log."""
        state = initial_state(self.initial, self.params)
        for record in self.move_log:
            state = apply_move(state, record.move, self.params)
        if state != self.state:
            raise RuntimeError(f"session {self.id}: state diverged from its move log")


def _move_json(move: Move | None) -> dict | None:
    return None if move is None else {"pile": move.pile, "amount": move.amount}


def session_view(session: GameSession) -> dict:
    state = session.state
    pend = state.pending
    finished = session.finished()
    return {
        "id": session.id,
        "p": session.params.p,
        "m": session.params.m,
        "engineSide": session.engine_side,
        "position": {"pile0": state.position.pile0, "pile1": state.position.pile1},
        "pending": None if pend is None else {"target": pend.target, "base": pend.base},
        "creditMover": state.credit_mover,
        "creditOther": state.credit_other,
        "status": "finished" if finished else "ongoing",
        "winner": session.winner(),
        "toMove": None if finished else session.to_move,
        "moves": [
            {
                "player": record.player,
                "pile": record.move.pile,
                "amount": record.move.amount,
                "imitation": record.imitation,
            }
            for record in session.move_log
        ],
    }


def _grid_code(kind: StaticKind, reason: StaticReason) -> str:
    if kind is StaticKind.DYNAMIC:
        return "D"
    return _GRID_CODES.get((kind, None if kind is StaticKind.NON_DYNAMIC_P else reason), "n")


def analysis_view(session: GameSession, table: WythoffTable) -> dict:
    params = session.params
    state = session.state
    verdict = classify(state, params, table)
    static = classify_static(state.position, params, table)
    legal = legal_moves(state, params)
    forbidden = [
        move
        for move in moves_from(state.position)
        if state.credit_mover == 0 and is_imitation(state, move, params)
    ]
    if session.finished():
        recommended = None
    else:
        recommended = best_move(state, params, table)
        if recommended is None:
            recommended = fallback_move(state, params, table)

    extent0, extent1 = session.initial.pile0, session.initial.pile1
    marks: set[tuple[int, int]] = set()
    for a, b in table.pairs:
        if a > extent0 and a > extent1:
            break
        if a <= extent0 and b <= extent1:
            marks.add((a, b))
        if b <= extent0 and a <= extent1:
            marks.add((b, a))
    grid = []
    for y in range(extent1 + 1):
        row = []
        for x in range(extent0 + 1):
            cell = classify_static(Position(x, y), params, table)
            row.append(_grid_code(cell.kind, cell.reason))
        grid.append("".join(row))

    pend = state.pending
    return {
        "position": {"pile0": state.position.pile0, "pile1": state.position.pile1},
        "status": "finished" if session.finished() else "ongoing",
        "creditMover": state.credit_mover,
        "creditOther": state.credit_other,
        "verdict": {
            "outcome": verdict.outcome,
            "clause": verdict.clause,
            "winningMove": _move_json(verdict.winning_move),
        },
        "static": {"kind": static.kind.value, "reason": static.reason.value},
        "legalMoves": [_move_json(move) for move in legal],
        "forbiddenMoves": [_move_json(move) for move in forbidden],
        "recommendedMove": _move_json(recommended),
        "pendingWindow": None
        if pend is None
        else {"target": pend.target, "lo": pend.base, "hi": pend.base + params.m - 1},
        "overlays": {
            "extent": {"pile0": extent0, "pile1": extent1},
            "wythoffP": [list(cell) for cell in sorted(marks)],
            "staticGrid": grid,
        },
    }


def create_app(
    pile_cap: int = 500,
    move_log_path: str | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="imitation-nim", docs_url=None, redoc_url=None)
    sessions: dict[str, GameSession] = {}
    store_lock = threading.Lock()
    tables: dict[tuple[int, int], WythoffTable] = {}
    tables_lock = threading.Lock()

    def table_for(params: GameParams, height: int) -> WythoffTable:
        key = (params.p, params.m)
        with tables_lock:
            table = tables.get(key)
            if table is None or table.max_a <= height:
                table = table_covering(params, height + 1)
                tables[key] = table
            return table

    def log_move(session: GameSession, record: MoveRecord) -> None:
        if move_log_path is None:
            return
        entry = {
            "session": session.id,
            "seq": len(session.move_log) - 1,
            "player": record.player,
            "pile": record.move.pile,
            "amount": record.move.amount,
            "imitation": record.imitation,
        }
        with open(move_log_path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(entry, separators=(",", ":")) + "\n")

    def get_session(session_id: str) -> GameSession:
        session = sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown_session", f"no session {session_id!r}")
        return session

    def play(session: GameSession, move: Move, player: str) -> None:
        try:
            imitation = is_imitation(session.state, move, session.params)
            session.state = apply_move(session.state, move, session.params)
        except IllegalMoveError as exc:
            raise ApiError(400, exc.code, str(exc)) from exc
        session.move_log.append(MoveRecord(player, move, imitation))
        session.check_replay_integrity()
        log_move(session, session.move_log[-1])

    def engine_reply(session: GameSession) -> None:
        if session.engine_side != session.to_move or session.finished():
            return
        table = table_for(session.params, max(session.initial.pile0, session.initial.pile1))
        move = best_move(session.state, session.params, table)
        if move is None:
            move = fallback_move(session.state, session.params, table)
        if move is None:  # only a stalled engine stub can get here
            return
        play(session, move, session.engine_side)

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse({"code": exc.code, "message": exc.message}, status_code=exc.status)

    async def read_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception as exc:
            raise ApiError(400, "invalid_params", "request body must be JSON") from exc
        if not isinstance(body, dict):
            raise ApiError(400, "invalid_params", "request body must be a JSON object")
        return body

    def require_int(body: dict, name: str, lo: int, hi: int) -> int:
        value = body.get(name)
        if not isinstance(value, int) or isinstance(value, bool) or not lo <= value <= hi:
            raise ApiError(
                400, "invalid_params", f"{name} must be an integer in [{lo}, {hi}]"
            )
        return value

    @app.post("/api/games")
    async def create_game(request: Request) -> JSONResponse:
        body = await read_body(request)
        p = require_int(body, "p", 1, 64)
        m = require_int(body, "m", 1, 64)
        a = require_int(body, "a", 0, pile_cap)
        b = require_int(body, "b", 0, pile_cap)
        engine_side = body.get("engineSide", "none")
        if engine_side not in ("none", "first", "second"):
            raise ApiError(400, "invalid_params", "engineSide must be none, first or second")
        params = GameParams(p, m)
        position = Position(a, b)
        session = GameSession(
            id=secrets.token_hex(8),
            params=params,
            initial=position,
            engine_side=engine_side,
            state=initial_state(position, params),
        )
        with store_lock:
            sessions[session.id] = session
        with session.lock:
            engine_reply(session)
            return JSONResponse(session_view(session))

    @app.get("/api/games/{session_id}")
    async def get_game(session_id: str) -> JSONResponse:
        session = get_session(session_id)
        return JSONResponse(session_view(session))

    @app.post("/api/games/{session_id}/moves")
    async def post_move(session_id: str, request: Request) -> JSONResponse:
        session = get_session(session_id)
        body = await read_body(request)
        pile = require_int(body, "pile", 0, 1)
        amount = require_int(body, "amount", 1, 10**9)
        with session.lock:
            # in a finished session no move is legal, so play() below yields
            # the precise rules-level rejection (e.g. the budget error for
            # the imitation that ended the game)
            if session.engine_side == session.to_move and not session.finished():
                raise ApiError(409, "not_your_turn", "it is the engine's turn")
            play(session, Move(pile, amount), session.to_move)
            engine_reply(session)
            return JSONResponse(session_view(session))

    @app.get("/api/games/{session_id}/analysis")
    async def get_analysis(session_id: str) -> JSONResponse:
        session = get_session(session_id)
        table = table_for(session.params, max(session.initial.pile0, session.initial.pile1))
        return JSONResponse(analysis_view(session, table))

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
