"""Pydantic request/response models for the HTTP API.

The /api/pennant body is produced by render.emit_json and returned verbatim
(byte parity with the CLI), so its models here document the schema for
OpenAPI without re-serializing the payload.
"""
from __future__ import annotations

from pydantic import BaseModel, Field

__all__ = [
    "CitingDoc",
    "ErrorResponse",
    "MentionResponse",
    "ModeStats",
    "PennantConfigModel",
    "PennantPointModel",
    "PennantResponse",
    "StatsResponse",
]


class ErrorResponse(BaseModel):
    error: str


class ModeStats(BaseModel):
    n_docs: int
    n_keys: int


class StatsResponse(BaseModel):
    modes: list[str]
    index_version: int
    citation: ModeStats | None = None
    descriptor: ModeStats | None = None


class CitingDoc(BaseModel):
    doc_id: str
    title: str | None = None
    year: int | None = None


class MentionResponse(BaseModel):
    id: str
    df: int
    sample_citing_docs: list[CitingDoc]


class PennantConfigModel(BaseModel):
    mode: str
    k: int
    min_tf: int
    log_base: float
    idf_style: str
    sector_policy: str
    sector_bounds: tuple[float, float] | None = None


class PennantPointModel(BaseModel):
    id: str
    tf: int
    df: int
    ce: float
    ease: float
    sector: str
    title: str | None = None


class PennantResponse(BaseModel):
    seed: str
    mode: str
    n_docs: int
    config: PennantConfigModel
    sector_bounds: tuple[float, float] = Field(description="(b1, b2) on the ease axis")
    points: list[PennantPointModel]
