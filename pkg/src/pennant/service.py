"""Read-only HTTP API over loaded indexes, plus static hosting for the explorer UI.

Every endpoint is a GET over immutable state: responses depend only on the
URL and the loaded index files, so any number of concurrent requests are
safe and bodies are cacheable until the index files change (restart to
refresh; hot reload is out of scope).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import render
from .core import PennantConfig, build_pennant
from .errors import SeedNotFoundError
from .index import INDEX_FORMAT_VERSION, CoMentionIndex
from .schemas import (
    CitingDoc,
    MentionResponse,
    ModeStats,
    PennantResponse,
    StatsResponse,
)

__all__ = ["ServiceConfig", "create_app", "MAX_K", "MENTION_SAMPLE_LIMIT"]

logger = logging.getLogger(__name__)

MAX_K = 1000
MENTION_SAMPLE_LIMIT = 20


@dataclass
class ServiceConfig:
    """What the service serves: one index per mode plus query defaults."""

    indexes: dict[str, CoMentionIndex]
    defaults: PennantConfig = field(default_factory=PennantConfig)
    static_dir: Path | None = None
    max_k: int = MAX_K
    cors_origins: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.indexes:
            raise ValueError("at least one index must be loaded")
        for mode, index in self.indexes.items():
            if mode != index.mode:
                raise ValueError(f"index registered under {mode!r} has mode {index.mode!r}")


class _BadRequest(Exception):
    def __init__(self, message: str) -> None:
        self.message = message


def _parse_int(raw: str, name: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise _BadRequest(f"invalid integer for {name}: {raw!r}") from None


def _parse_float(raw: str, name: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise _BadRequest(f"invalid number for {name}: {raw!r}") from None


def create_app(config: ServiceConfig) -> FastAPI:
    app = FastAPI(title="pennant", version="0.1.0", docs_url="/api/docs", openapi_url="/api/openapi.json")

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=config.cors_origins,
            allow_methods=["GET"],
            allow_headers=["*"],
        )

    # API errors are always JSON with an "error" field, never HTML.
    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException) -> JSONResponse:
        return JSONResponse({"error": str(exc.detail)}, status_code=exc.status_code)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse({"error": "invalid request"}, status_code=400)

    def _bad_request(message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=400)

    def _resolve_mode(mode: str | None) -> CoMentionIndex:
        if mode is None:
            mode = config.defaults.mode
        if mode is None:
            if len(config.indexes) == 1:
                mode = next(iter(config.indexes))
            else:
                mode = "citation" if "citation" in config.indexes else sorted(config.indexes)[0]
        index = config.indexes.get(mode)
        if index is None:
            raise _BadRequest(f"no index loaded for mode: {mode!r}")
        return index

    @app.get("/api/stats", response_model=StatsResponse, response_model_exclude_none=True)
    def stats() -> StatsResponse:
        per_mode = {
            mode: ModeStats(n_docs=index.n_docs, n_keys=index.n_keys)
            for mode, index in config.indexes.items()
        }
        return StatsResponse(
            modes=sorted(config.indexes),
            index_version=INDEX_FORMAT_VERSION,
            **per_mode,
        )

    @app.get("/api/pennant", response_model=PennantResponse)
    def pennant(
        seed: str | None = None,
        mode: str | None = None,
        k: str | None = None,
        min_tf: str | None = None,
        log_base: str | None = None,
        idf_style: str | None = None,
        sectors: str | None = None,
    ) -> Response:
        # Parameters arrive as raw strings so malformed values map to 400
        # (FastAPI's own coercion failures would surface as 422).
        try:
            if not seed:
                raise _BadRequest("missing required parameter: seed")
            index = _resolve_mode(mode)
            defaults = config.defaults
            k_val = _parse_int(k, "k") if k is not None else defaults.k
            if k_val > config.max_k:
                raise _BadRequest(f"k exceeds maximum {config.max_k}")
            min_tf_val = _parse_int(min_tf, "min_tf") if min_tf is not None else defaults.min_tf
            base_val = _parse_float(log_base, "log_base") if log_base is not None else defaults.log_base
            style_val = idf_style if idf_style is not None else defaults.idf_style
            if sectors is not None:
                pieces = sectors.split(",")
                if len(pieces) != 2:
                    raise _BadRequest("sectors must be two comma-separated numbers: b1,b2")
                bounds = (_parse_float(pieces[0], "sectors"), _parse_float(pieces[1], "sectors"))
                policy = "absolute"
            else:
                bounds = defaults.sector_bounds
                policy = defaults.sector_policy
            try:
                pennant_config = PennantConfig(
                    mode=index.mode,
                    k=k_val,
                    min_tf=min_tf_val,
                    log_base=base_val,
                    idf_style=style_val,
                    sector_policy=policy,
                    sector_bounds=bounds,
                )
            except ValueError as exc:
                raise _BadRequest(str(exc)) from None
        except _BadRequest as exc:
            return _bad_request(exc.message)

        try:
            diagram = build_pennant(index, seed, pennant_config)
        except SeedNotFoundError:
            return JSONResponse({"error": "seed not found"}, status_code=404)

        # Byte-for-byte the same document the CLI writes for these parameters.
        return Response(content=render.emit_json(diagram), media_type="application/json")

    @app.get("/api/mention/{mention_id}", response_model=MentionResponse)
    def mention(mention_id: str, mode: str | None = None):
        try:
            index = _resolve_mode(mode)
        except _BadRequest as exc:
            return _bad_request(exc.message)
        docs = index.postings.get(mention_id)
        if docs is None:
            return JSONResponse({"error": "mention not found"}, status_code=404)
        sample = [
            CitingDoc(doc_id=index.doc_ids[o], title=index.titles[o], year=index.years[o])
            for o in docs[:MENTION_SAMPLE_LIMIT]
        ]
        return MentionResponse(id=mention_id, df=len(docs), sample_citing_docs=sample)

    if config.static_dir is not None:
        app.mount("/", StaticFiles(directory=str(config.static_dir), html=True), name="ui")
    else:

        @app.get("/")
        def root() -> dict:
            return {
                "service": "pennant",
                "endpoints": ["/api/stats", "/api/pennant", "/api/mention/{id}"],
            }

    return app
