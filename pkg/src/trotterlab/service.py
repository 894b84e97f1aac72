"""Minimal HTTP/JSON API for the explorer UI.

Stateless: every request recomputes its result.  Responses are deterministic
functions of the request body (seed included); wall-clock compute time is
reported in the ``X-Compute-Seconds`` header so bodies stay byte-identical
with the CLI's files.
"""

from __future__ import annotations

import time
import uuid

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import __version__, experiments, serialize
from .errors import ShapeError
from .linalg import matrix_from_json
from .words import word_count

MAX_DIM = 4
MAX_N = 10
MAX_POINTS = 200_000


class RequestError(Exception):
    """Client error with a machine-readable reason code."""

    def __init__(self, code, detail, **extra):
        super().__init__(detail)
        self.code = code
        self.detail = detail
        self.extra = extra


def _require_int(body, key, low, high, default=None):
    value = body.get(key, default)
    if value is None:
        raise RequestError(f"{key}_range", f'"{key}" is required')
    if not isinstance(value, int) or isinstance(value, bool) or not low <= value <= high:
        raise RequestError(f"{key}_range", f'"{key}" must be an integer in {low}..{high}')
    return value


def _parse_common(body) -> dict:
    if not isinstance(body, dict):
        raise RequestError("body", "request body must be a JSON object")
    raw = body.get("matrices")
    if not isinstance(raw, list) or len(raw) < 2:
        raise RequestError("shape", 'need a "matrices" list with at least two entries')
    matrices = []
    for i, obj in enumerate(raw):
        try:
            matrices.append(matrix_from_json(obj))
        except ShapeError as exc:
            raise RequestError("shape", f"matrix {i}: {exc}") from exc
        except ValueError as exc:
            raise RequestError("finiteness", f"matrix {i}: {exc}") from exc
    dim = matrices[0].shape[0]
    if any(m.shape[0] != dim for m in matrices):
        raise RequestError("shape", "all matrices must share one dimension")
    if dim > MAX_DIM:
        raise RequestError("dim_cap", f"dimension {dim} exceeds the cap of {MAX_DIM}")

    n = _require_int(body, "n", 1, MAX_N)
    mode = body.get("mode", "exhaustive")
    if mode not in ("exhaustive", "sample"):
        raise RequestError("mode", '"mode" must be "exhaustive" or "sample"')
    count = None
    if mode == "exhaustive":
        total = word_count(n, len(matrices))
        if total > MAX_POINTS:
            raise RequestError(
                "cap_exceeded",
                f"exhaustive run would generate {total} words (cap {MAX_POINTS})",
                estimated_count=total,
            )
    else:
        count = _require_int(body, "count", 1, MAX_POINTS)
    seed = body.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise RequestError("seed", '"seed" must be an integer')
    return dict(matrices=tuple(matrices), n=n, mode=mode, count=count, seed=seed)


def _parse_threshold(body):
    threshold = body.get("threshold")
    if threshold is None:
        return None
    if isinstance(threshold, bool) or not isinstance(threshold, (int, float)) or threshold < 0:
        raise RequestError("threshold", '"threshold" must be a non-negative number')
    return float(threshold)


def _json_response(payload: str, started: float) -> Response:
    return Response(
        content=payload,
        media_type="application/json",
        headers={"X-Compute-Seconds": f"{time.perf_counter() - started:.6f}"},
    )


def create_app() -> FastAPI:
    app = FastAPI(title="trotterlab", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestError)
    async def _client_error(_, exc: RequestError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": exc.code, "detail": exc.detail, **exc.extra}},
        )

    @app.exception_handler(Exception)
    async def _server_error(_, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"error": {"code": "internal", "id": uuid.uuid4().hex}},
        )

    @app.get("/api/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/cloud")
    async def cloud(request: Request):
        started = time.perf_counter()
        params = _parse_common(await request.json())
        result = experiments.generate_point_cloud(
            params["matrices"],
            params["n"],
            mode=params["mode"],
            count=params["count"],
            seed=params["seed"],
        )
        return _json_response(serialize.dumps(serialize.cloud_to_dict(result)), started)

    @app.post("/api/concentration")
    async def concentration(request: Request):
        started = time.perf_counter()
        body = await request.json()
        params = _parse_common(body)
        report = experiments.concentration_experiment(
            params["matrices"],
            params["n"],
            mode=params["mode"],
            count=params["count"],
            seed=params["seed"],
            threshold=_parse_threshold(body),
        )
        return _json_response(serialize.dumps(serialize.report_to_dict(report)), started)

    return app
