"""Stateless HTTP/JSON facade over evaluate and optimize.

Endpoints: POST /api/evaluate, POST /api/optimize, GET /healthz. Requests
and responses use the same JSON documents as the files and the library, so
service numbers are exactly the library numbers.
"""

from __future__ import annotations

import json
import os

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import ValidationError as PydanticValidationError
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import __version__
from .errors import AmaError, DomainError, EmptyLayoutError, ValidationError
from .ingest import layout_from_document, layout_to_document
from .metrics import evaluate
from .model import Layout
from .optimize import ObjectiveSpec, SearchParams, optimize
from .schemas import (
    ApiErrorModel,
    EvaluateResponse,
    HealthResponse,
    LayoutDocumentModel,
    OptimizeRequest,
    OptimizeResponse,
)

MAX_BODY_BYTES = 1 << 20
MAX_OBJECTS = 500
MAX_ITERATIONS = 200_000
MAX_TRACE_POINTS = 1_000


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, object_id: str | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.object_id = object_id

    def response(self) -> JSONResponse:
        body = ApiErrorModel(code=self.code, message=self.message, object_id=self.object_id)
        return JSONResponse(status_code=self.status, content=body.model_dump())


async def _read_json(request: Request) -> dict:
    body = await request.body()
    if len(body) > MAX_BODY_BYTES:
        raise ApiError(413, "oversize", f"request body exceeds {MAX_BODY_BYTES} bytes")
    try:
        return json.loads(body)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ApiError(400, "malformed_json", f"body is not valid JSON: {exc}") from exc


def _layout_from_payload(payload) -> tuple[Layout, int]:
    try:
        doc = LayoutDocumentModel.model_validate(payload)
    except PydanticValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ApiError(422, "validation_error", f"{where}: {first['msg']}") from exc
    if len(doc.objects) > MAX_OBJECTS:
        raise ApiError(413, "oversize", f"layout exceeds {MAX_OBJECTS} objects")
    try:
        layout = layout_from_document(doc.model_dump())
    except (ValidationError, AmaError) as exc:
        raise ApiError(
            422, "validation_error", str(exc), object_id=getattr(exc, "object_id", None)
        ) from exc
    return layout, doc.schema_version


def _downsample(trace, limit: int = MAX_TRACE_POINTS):
    if len(trace) <= limit:
        return list(trace)
    last = len(trace) - 1
    picks = sorted({round(i * last / (limit - 1)) for i in range(limit)})
    return [trace[i] for i in picks]


def create_app() -> FastAPI:
    app = FastAPI(title="ama", version=__version__, docs_url=None, redoc_url=None)

    origins = os.environ.get("AMA_CORS_ORIGINS", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins.split(",")],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def api_error_handler(_request, exc: ApiError):
        return exc.response()

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(_request, exc: StarletteHTTPException):
        code = "not_found" if exc.status_code == 404 else "http_error"
        return ApiError(exc.status_code, code, str(exc.detail)).response()

    @app.api_route("/healthz", methods=["GET", "HEAD"], response_model=HealthResponse)
    async def healthz():
        return HealthResponse(status="ok", version=__version__)

    @app.post("/api/evaluate", response_model=EvaluateResponse)
    async def post_evaluate(request: Request):
        payload = await _read_json(request)
        layout, schema_version = _layout_from_payload(payload)
        try:
            mv = evaluate(layout)
        except EmptyLayoutError as exc:
            raise ApiError(422, "validation_error", str(exc)) from exc
        return EvaluateResponse(
            **mv.as_dict(),
            object_count=len(layout.objects),
            schema_version=schema_version,
        )

    @app.post("/api/optimize", response_model=OptimizeResponse)
    async def post_optimize(request: Request):
        payload = await _read_json(request)
        try:
            req = OptimizeRequest.model_validate(payload)
        except PydanticValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(p) for p in first["loc"])
            raise ApiError(422, "validation_error", f"{where}: {first['msg']}") from exc
        if len(req.layout.objects) > MAX_OBJECTS:
            raise ApiError(413, "oversize", f"layout exceeds {MAX_OBJECTS} objects")
        if req.params.iterations > MAX_ITERATIONS:
            raise ApiError(
                422, "validation_error", f"iterations capped at {MAX_ITERATIONS} per request"
            )
        try:
            layout = layout_from_document(req.layout.model_dump())
            objective = ObjectiveSpec(
                mode=req.objective.mode.lower(),
                weights=tuple(req.objective.weights) if req.objective.weights else None,
                target=(
                    tuple(req.objective.target)
                    if isinstance(req.objective.target, list)
                    else req.objective.target
                ),
            )
            params = SearchParams(
                seed=req.params.seed,
                iterations=req.params.iterations,
                initial_temperature=req.params.initial_temperature,
                cooling=req.params.cooling,
                move_scale=req.params.move_scale,
                forbid_overlap=req.params.forbid_overlap,
            )
            result = optimize(layout, objective, params)
        except (ValidationError, DomainError, EmptyLayoutError, AmaError) as exc:
            raise ApiError(
                422, "validation_error", str(exc), object_id=getattr(exc, "object_id", None)
            ) from exc
        return OptimizeResponse(
            best_layout=LayoutDocumentModel.model_validate(
                layout_to_document(result.best_layout)
            ),
            best_score=result.best_score,
            trace=_downsample(result.trace),
            evaluations=result.evaluations,
            rng=result.rng,
        )

    return app


app = create_app()


def default_port() -> int:
    return int(os.environ.get("AMA_PORT", "8000"))


def serve(port: int | None = None, host: str = "127.0.0.1"):
    import uvicorn

    uvicorn.run(app, host=host, port=default_port() if port is None else port)
