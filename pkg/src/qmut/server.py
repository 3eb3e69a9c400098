"""Stateless JSON-over-HTTP API serving the explorer UI.

Every request is a pure computation over its payload; the server holds no
session state, so any request order gives the same responses. Invalid
payloads get HTTP 400 with an ApiError body; enumeration budgets above the
server-side ceilings get HTTP 422. User input never produces a 5xx.
"""

from __future__ import annotations

import os
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from . import io
from .enumeration import Budget, enumerate_class
from .errors import InvalidDocumentError, QuiverError
from .quiver import mutate
from .seeds import initial_seed, mutate_seed

# Hard ceilings: a UI user must not be able to launch an unbounded
# enumeration of a wild class.
MAX_QUIVERS_CAP = 20_000
MAX_MULT_CAP = 256
DEFAULT_BUDGET = Budget(max_quivers=5_000, max_arrow_multiplicity=64)


def _json(payload: Any, status_code: int = 200) -> Response:
    # Single serialization path shared with the CLI, byte for byte.
    return Response(
        content=io.canonical_dumps(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error(exc: QuiverError, status_code: int = 400) -> Response:
    return _json(io.error_payload(exc), status_code)


def _get_quiver(body: Any):
    if not isinstance(body, dict):
        raise InvalidDocumentError("request body must be a JSON object")
    if "quiver" not in body:
        raise InvalidDocumentError("request body needs a 'quiver' document")
    q, _labels = io.parse_document(body["quiver"])
    return q


def _get_vertex(body: dict, n: int) -> int:
    v = body.get("vertex")
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidDocumentError("request body needs an integer 'vertex'")
    return v


def _get_budget(body: dict) -> Budget:
    raw = body.get("budget") or {}
    if not isinstance(raw, dict):
        raise InvalidDocumentError("'budget' must be an object")
    mq = raw.get("max_quivers", DEFAULT_BUDGET.max_quivers)
    mm = raw.get("max_arrow_multiplicity", DEFAULT_BUDGET.max_arrow_multiplicity)
    for v in (mq, mm):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidDocumentError("budget fields must be integers")
    budget = Budget(max_quivers=mq, max_arrow_multiplicity=mm)
    budget.check()
    if mq > MAX_QUIVERS_CAP or mm > MAX_MULT_CAP:
        raise _BudgetCapExceeded(
            f"budget exceeds server caps (max_quivers <= {MAX_QUIVERS_CAP}, "
            f"max_arrow_multiplicity <= {MAX_MULT_CAP})"
        )
    return budget


class _BudgetCapExceeded(QuiverError):
    code = "budget_cap_exceeded"


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="qmut", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _on_validation(_req: Request, exc: RequestValidationError):
        return _error(InvalidDocumentError(str(exc)))

    @app.exception_handler(QuiverError)
    async def _on_quiver_error(_req: Request, exc: QuiverError):
        if isinstance(exc, _BudgetCapExceeded):
            return _error(exc, 422)
        return _error(exc)

    async def _body(request: Request) -> Any:
        try:
            return await request.json()
        except Exception as exc:
            raise InvalidDocumentError(f"invalid JSON body: {exc}") from exc

    @app.get("/api/health")
    async def health():
        return _json({"status": "ok"})

    @app.post("/api/validate")
    async def api_validate(request: Request):
        body = await _body(request)
        q = _get_quiver(body)
        return _json({"ok": True, "n": q.n})

    @app.post("/api/mutate")
    async def api_mutate(request: Request):
        body = await _body(request)
        q = _get_quiver(body)
        k = _get_vertex(body, q.n)
        return _json({"quiver": io.render_document(mutate(q, k))})

    @app.post("/api/classify")
    async def api_classify(request: Request):
        body = await _body(request)
        q = _get_quiver(body)
        return _json(io.classify_payload(q))

    @app.post("/api/enumerate")
    async def api_enumerate(request: Request):
        body = await _body(request)
        q = _get_quiver(body)
        budget = _get_budget(body)
        emit_class = bool(body.get("emit_class", False))
        emit_edges = bool(body.get("emit_edges", False))
        rep = enumerate_class(q, budget)
        return _json(io.enumerate_payload(rep, emit_class=emit_class, emit_edges=emit_edges))

    @app.post("/api/seed/initial")
    async def api_seed_initial(request: Request):
        body = await _body(request)
        q = _get_quiver(body)
        return _json({"seed": io.render_seed(initial_seed(q))})

    @app.post("/api/seed/mutate")
    async def api_seed_mutate(request: Request):
        body = await _body(request)
        if not isinstance(body, dict) or "seed" not in body:
            raise InvalidDocumentError("request body needs a 'seed'")
        seed = io.parse_seed(body["seed"])
        k = _get_vertex(body, seed.n)
        new_seed, (removed, added) = mutate_seed(seed, k)
        return _json(
            {
                "seed": io.render_seed(new_seed),
                "exchange_pair": {
                    "vertex": k,
                    "removed": io.render_laurent(removed),
                    "added": io.render_laurent(added),
                },
            }
        )

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
