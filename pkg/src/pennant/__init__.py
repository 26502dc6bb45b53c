"""Pennant-diagram recommender engine for document corpora.

Pipeline: JSONL corpus -> validated records -> immutable co-mention index ->
pennant diagram (logged tf / logged idf axes, A/B/C specificity sectors) ->
JSON / SVG output, served over HTTP or emitted from the CLI.
"""
from .core import (
    PennantConfig,
    PennantDiagram,
    PennantPoint,
    build_pennant,
    candidates,
    classify_sector,
    score,
    sector_bounds_for,
)
from .errors import (
    CorruptIndexError,
    DegenerateAxisError,
    EmptyCorpusError,
    IndexFormatError,
    PennantError,
    SeedNotFoundError,
    UnsupportedVersionError,
)
from .index import (
    INDEX_FORMAT_VERSION,
    CoMentionIndex,
    build_index,
    load_index,
    save_index,
)
from .ingest import DocumentRecord, IngestReport, normalize_id, parse_corpus
from .render import PlotSpec, diagram_from_json, emit_json, emit_svg

__version__ = "0.1.0"

__all__ = [
    "CoMentionIndex",
    "CorruptIndexError",
    "DegenerateAxisError",
    "DocumentRecord",
    "EmptyCorpusError",
    "INDEX_FORMAT_VERSION",
    "IndexFormatError",
    "IngestReport",
    "PennantConfig",
    "PennantDiagram",
    "PennantError",
    "PennantPoint",
    "PlotSpec",
    "SeedNotFoundError",
    "UnsupportedVersionError",
    "build_index",
    "build_pennant",
    "candidates",
    "classify_sector",
    "diagram_from_json",
    "emit_json",
    "emit_svg",
    "load_index",
    "normalize_id",
    "parse_corpus",
    "save_index",
    "score",
    "sector_bounds_for",
    "__version__",
]
