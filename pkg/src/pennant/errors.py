"""Exception types shared across the package."""
from __future__ import annotations

__all__ = [
    "PennantError",
    "EmptyCorpusError",
    "SeedNotFoundError",
    "IndexFormatError",
    "UnsupportedVersionError",
    "CorruptIndexError",
    "DegenerateAxisError",
]


class PennantError(Exception):
    """Base class for domain errors raised by this package."""


class EmptyCorpusError(PennantError):
    """Index build attempted over zero records."""


class SeedNotFoundError(PennantError):
    """Requested seed has no postings in the index."""


class IndexFormatError(PennantError):
    """Index file cannot be loaded."""


class UnsupportedVersionError(IndexFormatError):
    """Index file format_version is not supported by this code."""


class CorruptIndexError(IndexFormatError):
    """Index file failed checksum or structural validation."""


class DegenerateAxisError(PennantError):
    """Plot axes would have zero extent (single-document corpus)."""
