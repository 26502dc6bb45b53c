"""Corpus ingestion: parse JSONL document files into validated records.

Corpus schema, one JSON object per line:

    {"id": str (required), "title": str?, "references": [str]?,
     "descriptors": [str]?, "year": int?}

Blank lines are ignored. A malformed line is rejected and reported with its
line number; it never aborts the ingest. Only an unreadable stream is fatal.
"""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from typing import IO, Iterable, Union

__all__ = [
    "DocumentRecord",
    "IngestReport",
    "normalize_id",
    "parse_corpus",
    "record_to_dict",
    "to_jsonl_line",
]


def normalize_id(raw: str) -> str:
    """Canonicalize an identifier: Unicode NFC, trim, collapse inner whitespace.

    Case is preserved; IDs are opaque and case-folding could merge distinct
    works. May return "" (callers drop empty results).
    """
    # str.split() with no argument splits on any whitespace run and drops
    # leading/trailing whitespace, so the join both trims and collapses.
    return " ".join(unicodedata.normalize("NFC", raw).split())


@dataclass
class DocumentRecord:
    """One citing document: its identity plus the works and descriptors it mentions."""

    doc_id: str
    title: str | None = None
    references: list[str] = field(default_factory=list)
    descriptors: list[str] = field(default_factory=list)
    year: int | None = None


@dataclass
class IngestReport:
    """Per-run ingest accounting; accepted + rejected == non-blank input lines."""

    records_accepted: int = 0
    records_rejected: int = 0
    rejects: list[tuple[int, str]] = field(default_factory=list)
    duplicate_doc_ids: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "records_accepted": self.records_accepted,
            "records_rejected": self.records_rejected,
            "rejects": [{"line": line, "reason": reason} for line, reason in self.rejects],
            "duplicate_doc_ids": list(self.duplicate_doc_ids),
        }


class _LineError(ValueError):
    """Schema violation on a single corpus line; carries the reject reason."""


def _clean_id_list(values: object, field_name: str) -> list[str]:
    """Normalize a references/descriptors array: drop empties, collapse duplicates.

    First occurrence wins so input order is preserved.
    """
    if not isinstance(values, list):
        raise _LineError(f"{field_name} must be an array of strings")
    out: list[str] = []
    seen: set[str] = set()
    for value in values:
        if not isinstance(value, str):
            raise _LineError(f"{field_name} must be an array of strings")
        cleaned = normalize_id(value)
        if cleaned and cleaned not in seen:
            seen.add(cleaned)
            out.append(cleaned)
    return out


def _record_from_obj(obj: object) -> DocumentRecord:
    if not isinstance(obj, dict):
        raise _LineError("not a JSON object")

    raw_id = obj.get("id")
    if raw_id is None:
        raise _LineError("missing id")
    if not isinstance(raw_id, str):
        raise _LineError("id must be a string")
    doc_id = normalize_id(raw_id)
    if not doc_id:
        raise _LineError("empty id")

    title = obj.get("title")
    if title is not None and not isinstance(title, str):
        raise _LineError("title must be a string")

    year = obj.get("year")
    if year is not None and (not isinstance(year, int) or isinstance(year, bool)):
        raise _LineError("year must be an integer")

    return DocumentRecord(
        doc_id=doc_id,
        title=title,
        references=_clean_id_list(obj.get("references", []), "references"),
        descriptors=_clean_id_list(obj.get("descriptors", []), "descriptors"),
        year=year,
    )


def parse_corpus(
    stream: Union[IO[bytes], IO[str], Iterable[bytes], Iterable[str]],
    format: str = "jsonl",
) -> tuple[list[DocumentRecord], IngestReport]:
    """Parse a JSONL corpus stream into records plus an ingest report.

    Every syntactically valid line with a non-empty id yields exactly one
    record. Later duplicates of a doc_id are rejected (first occurrence wins)
    and listed in the report. I/O errors from the stream propagate; anything
    else is a per-line reject.
    """
    if format != "jsonl":
        raise ValueError(f"unsupported corpus format: {format!r}")

    records: list[DocumentRecord] = []
    report = IngestReport()
    seen_ids: set[str] = set()

    for lineno, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError:
                report.records_rejected += 1
                report.rejects.append((lineno, "invalid utf-8"))
                continue
        else:
            line = raw
        if not line.strip():
            continue

        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            report.records_rejected += 1
            report.rejects.append((lineno, "parse error"))
            continue

        try:
            record = _record_from_obj(obj)
        except _LineError as exc:
            report.records_rejected += 1
            report.rejects.append((lineno, str(exc)))
            continue

        if record.doc_id in seen_ids:
            report.records_rejected += 1
            report.rejects.append((lineno, "duplicate doc_id"))
            report.duplicate_doc_ids.append(record.doc_id)
            continue

        seen_ids.add(record.doc_id)
        records.append(record)
        report.records_accepted += 1

    return records, report


def record_to_dict(record: DocumentRecord) -> dict:
    """Corpus-schema dict for a record; optional fields omitted when absent."""
    obj: dict = {"id": record.doc_id}
    if record.title is not None:
        obj["title"] = record.title
    if record.references:
        obj["references"] = list(record.references)
    if record.descriptors:
        obj["descriptors"] = list(record.descriptors)
    if record.year is not None:
        obj["year"] = record.year
    return obj


def to_jsonl_line(record: DocumentRecord) -> str:
    """Serialize one record back to its corpus line (no trailing newline)."""
    return json.dumps(record_to_dict(record), ensure_ascii=False)
