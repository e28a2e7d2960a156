"""Stateless JSON analysis service over the table-driven engine.

Three GET endpoints: /api/analyze classifies a position and every legal
sweep from it, /api/engine-move picks the move the engine would play, and
/api/health reports capacity and build status.  Clients own all game state;
identical requests always produce identical responses.

Error mapping: 400 for requests that do not describe a position (missing,
non-integer, or negative parameters, unknown convention), 422 for positions
that exceed the configured capacity, 409 for an engine-move request at the
terminal position.
"""

from __future__ import annotations

from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware

from .conventions import Convention
from .game import Engine, Position, iter_moves
from .tables import DEFAULT_MAX_N


def _position_json(g: Position) -> dict[str, int]:
    return {"x": g.x, "y": g.y, "z": g.z}


def _parse_position(request: Request, max_n: int) -> tuple[Position, Convention]:
    params = request.query_params
    coords = []
    for name in ("x", "y", "z"):
        raw = params.get(name)
        if raw is None:
            raise HTTPException(400, f"missing query parameter {name!r}")
        try:
            value = int(raw)
        except ValueError:
            raise HTTPException(400, f"{name} must be an integer, got {raw!r}")
        if value < 0:
            raise HTTPException(400, f"{name} must be nonnegative, got {value}")
        coords.append(value)
    raw_convention = params.get("convention")
    if raw_convention is None:
        raise HTTPException(400, "missing query parameter 'convention'")
    try:
        convention = Convention(raw_convention)
    except ValueError:
        choices = ", ".join(c.value for c in Convention)
        raise HTTPException(400, f"convention must be one of {choices}, got {raw_convention!r}")
    # y is capped like x and z so move lists stay bounded by capacity
    for name, value in zip(("x", "y", "z"), coords):
        if value >= max_n:
            raise HTTPException(
                422, f"{name} = {value} exceeds this server's capacity (limit {max_n - 1})"
            )
    return Position(*coords), convention


def create_app(max_n: int = DEFAULT_MAX_N) -> FastAPI:
    """Build the service app; tables are fully built during startup.

    Prebuilding to ``max_n`` means request handlers only ever read immutable
    tables, so concurrent requests need no locking.
    """

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        app.state.engine = Engine(max_n=max_n, prebuild=True)
        app.state.status = "ready"
        yield

    app = FastAPI(title="hiroi analysis service", lifespan=lifespan)
    app.state.engine = None
    app.state.status = "warming"
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )

    def engine_of(request: Request) -> Engine:
        engine = request.app.state.engine
        if engine is None:
            raise HTTPException(503, "tables are still building, retry shortly")
        return engine

    @app.get("/api/health")
    def health(request: Request):
        return {
            "status": request.app.state.status,
            "builtTables": ["GM1", "GM1STAR"],
            "maxN": max_n,
        }

    @app.get("/api/analyze")
    def analyze(request: Request):
        engine = engine_of(request)
        g, convention = _parse_position(request, max_n)
        outcome = engine.outcome(g, convention)
        moves = [
            {
                "to": _position_json(move.after),
                "outcome": engine.outcome(move.after, convention).value,
            }
            for move in iter_moves(g)
        ]
        winning = engine.winning_move(g, convention)
        return {
            "position": _position_json(g),
            "convention": convention.value,
            "outcome": outcome.value,
            "auxValue": engine.aux_value(g, convention),
            "moves": moves,
            "winningMove": None if winning is None else _position_json(winning.after),
        }

    @app.get("/api/engine-move")
    def engine_move(request: Request):
        engine = engine_of(request)
        g, convention = _parse_position(request, max_n)
        if g.is_terminal():
            raise HTTPException(409, "the terminal position has no moves")
        move = engine.winning_move(g, convention)
        if move is None:
            # losing anyway: play the first legal sweep and keep the game going
            move = next(iter_moves(g))
        return {"move": _position_json(move.after)}

    return app
