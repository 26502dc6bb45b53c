"""Immutable inverted co-mention index and its binary persistence.

The index answers "which documents mention key X" (postings) and the
transpose "which keys does document d mention" (forward lists). Documents
get dense ordinals in input order, so postings lists are built already
sorted; intersection and union work over sorted int lists.

File format v1 (little-endian):

    magic   b"PNIX"
    u32     format_version (= 1)
    32 B    sha256 over everything after this digest
    body:
        u8      mode (0 = citation, 1 = descriptor)
        varint  n_docs
        varint  n_keys
        doc table, n_docs entries:
            vstr doc_id; u8 flags (bit0 title, bit1 year);
            [vstr title]; [zigzag-varint year]
        postings, n_keys entries sorted by key:
            vstr key; varint df; varint first ordinal; varint gaps (>= 1)

vstr is varint length + UTF-8 bytes. The layout is deterministic: the same
records always serialize to the same bytes.
"""
from __future__ import annotations

import hashlib
import struct
from bisect import bisect_left
from typing import Iterable, Sequence

from .errors import CorruptIndexError, EmptyCorpusError, UnsupportedVersionError
from .ingest import DocumentRecord

__all__ = [
    "INDEX_FORMAT_VERSION",
    "MODES",
    "CoMentionIndex",
    "build_index",
    "intersect_count",
    "load_index",
    "save_index",
]

INDEX_FORMAT_VERSION = 1
MODES = ("citation", "descriptor")

_MAGIC = b"PNIX"
_MODE_CODES = {"citation": 0, "descriptor": 1}
_MODE_NAMES = {code: name for name, code in _MODE_CODES.items()}

# Length ratio above which intersection switches from linear merge to
# galloping probes of the longer list.
_GALLOP_RATIO = 16


class CoMentionIndex:
    """Inverted index over one mention field (references or descriptors).

    Treat instances as immutable after construction: concurrent readers need
    no synchronization, and pennant builds assume the counts never move.
    """

    def __init__(
        self,
        mode: str,
        doc_ids: list[str],
        titles: list[str | None],
        years: list[int | None],
        postings: dict[str, list[int]],
        forward: list[list[str]],
    ) -> None:
        self.mode = mode
        self.doc_ids = doc_ids
        self.titles = titles
        self.years = years
        self.postings = postings
        self.forward = forward
        self._ordinal_of = {doc_id: i for i, doc_id in enumerate(doc_ids)}

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    @property
    def n_keys(self) -> int:
        return len(self.postings)

    def df(self, key: str) -> int:
        """Global mention count of a key; 0 for unknown keys."""
        docs = self.postings.get(key)
        return len(docs) if docs is not None else 0

    def citing_set(self, key: str) -> list[int]:
        """Sorted ordinals of documents mentioning the key; [] if unknown.

        Unknown keys are not an error: callers distinguish "no postings"
        from fatal conditions themselves.
        """
        docs = self.postings.get(key)
        return docs if docs is not None else []

    def co_mention_count(self, a: str, b: str) -> int:
        """Number of documents mentioning both keys."""
        return intersect_count(self.citing_set(a), self.citing_set(b))

    def ordinal(self, doc_id: str) -> int | None:
        return self._ordinal_of.get(doc_id)

    def title_of(self, mention_id: str) -> str | None:
        """Display title if the mention key is itself a corpus document."""
        ordinal = self._ordinal_of.get(mention_id)
        return self.titles[ordinal] if ordinal is not None else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoMentionIndex):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.doc_ids == other.doc_ids
            and self.titles == other.titles
            and self.years == other.years
            and self.postings == other.postings
            and self.forward == other.forward
        )

    def __repr__(self) -> str:
        return f"CoMentionIndex(mode={self.mode!r}, n_docs={self.n_docs}, n_keys={self.n_keys})"


def intersect_count(a: Sequence[int], b: Sequence[int]) -> int:
    """Size of the intersection of two strictly ascending int lists.

    Linear merge for similar lengths; when one list is >= 16x longer,
    gallop through the long list (exponential probe + binary search).
    """
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return 0

    if len(b) >= _GALLOP_RATIO * len(a):
        count = 0
        lo = 0
        len_b = len(b)
        for x in a:
            # Gallop: double the window until it covers x, then bisect in it.
            step = 1
            hi = lo + 1
            while hi < len_b and b[hi] < x:
                lo = hi
                hi += step
                step *= 2
            pos = bisect_left(b, x, lo, min(hi + 1, len_b))
            if pos < len_b and b[pos] == x:
                count += 1
                lo = pos + 1
            else:
                lo = pos
            if lo >= len_b:
                break
        return count

    i = j = count = 0
    len_a, len_b = len(a), len(b)
    while i < len_a and j < len_b:
        xa = a[i]
        xb = b[j]
        if xa == xb:
            count += 1
            i += 1
            j += 1
        elif xa < xb:
            i += 1
        else:
            j += 1
    return count


def _mentions_of(record: DocumentRecord, mode: str) -> list[str]:
    return record.references if mode == "citation" else record.descriptors


def build_index(records: Sequence[DocumentRecord], mode: str) -> CoMentionIndex:
    """Build the inverted index for one mode over validated records.

    Records contributing zero mentions still count toward n_docs (they are
    part of the corpus the idf denominator refers to). Ordinals follow input
    order, which makes the build deterministic.
    """
    if mode not in _MODE_CODES:
        raise ValueError(f"unknown index mode: {mode!r}")
    if not records:
        raise EmptyCorpusError("empty corpus")

    doc_ids: list[str] = []
    titles: list[str | None] = []
    years: list[int | None] = []
    forward: list[list[str]] = []
    seen: set[str] = set()

    for record in records:
        if record.doc_id in seen:
            raise ValueError(f"duplicate doc_id: {record.doc_id!r}")
        seen.add(record.doc_id)
        doc_ids.append(record.doc_id)
        titles.append(record.title)
        years.append(record.year)
        # Mentions are set-based: a document co-cites a work at most once.
        forward.append(sorted(set(_mentions_of(record, mode))))

    postings: dict[str, list[int]] = {}
    for ordinal, keys in enumerate(forward):
        for key in keys:
            docs = postings.get(key)
            if docs is None:
                postings[key] = [ordinal]
            else:
                docs.append(ordinal)  # ordinals ascend, so lists stay sorted

    return CoMentionIndex(mode, doc_ids, titles, years, postings, forward)


# --- binary serialization -------------------------------------------------


def _write_varint(buf: bytearray, value: int) -> None:
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            buf.append(byte | 0x80)
        else:
            buf.append(byte)
            return


def _write_vstr(buf: bytearray, text: str) -> None:
    raw = text.encode("utf-8")
    _write_varint(buf, len(raw))
    buf.extend(raw)


def _zigzag(value: int) -> int:
    return (value << 1) ^ (value >> 63)


def _unzigzag(value: int) -> int:
    return (value >> 1) ^ -(value & 1)


class _Reader:
    """Bounds-checked cursor over the decoded body bytes."""

    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def varint(self) -> int:
        value = 0
        shift = 0
        data = self.data
        while True:
            if self.pos >= len(data):
                raise CorruptIndexError("corrupt index")
            byte = data[self.pos]
            self.pos += 1
            value |= (byte & 0x7F) << shift
            if not byte & 0x80:
                return value
            shift += 7
            if shift > 70:
                raise CorruptIndexError("corrupt index")

    def vstr(self) -> str:
        length = self.varint()
        end = self.pos + length
        if end > len(self.data):
            raise CorruptIndexError("corrupt index")
        try:
            text = self.data[self.pos : end].decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorruptIndexError("corrupt index") from exc
        self.pos = end
        return text

    def byte(self) -> int:
        if self.pos >= len(self.data):
            raise CorruptIndexError("corrupt index")
        value = self.data[self.pos]
        self.pos += 1
        return value

    def done(self) -> bool:
        return self.pos == len(self.data)


def _encode_body(index: CoMentionIndex) -> bytes:
    body = bytearray()
    body.append(_MODE_CODES[index.mode])
    _write_varint(body, index.n_docs)
    _write_varint(body, index.n_keys)

    for i in range(index.n_docs):
        _write_vstr(body, index.doc_ids[i])
        title = index.titles[i]
        year = index.years[i]
        flags = (1 if title is not None else 0) | (2 if year is not None else 0)
        body.append(flags)
        if title is not None:
            _write_vstr(body, title)
        if year is not None:
            _write_varint(body, _zigzag(year))

    for key in sorted(index.postings):
        docs = index.postings[key]
        _write_vstr(body, key)
        _write_varint(body, len(docs))
        prev = -1
        for ordinal in docs:
            _write_varint(body, ordinal - prev - 1 if prev >= 0 else ordinal)
            prev = ordinal
    return bytes(body)


def _decode_body(body: bytes) -> CoMentionIndex:
    reader = _Reader(body)
    mode_code = reader.byte()
    mode = _MODE_NAMES.get(mode_code)
    if mode is None:
        raise CorruptIndexError("corrupt index")
    n_docs = reader.varint()
    n_keys = reader.varint()

    doc_ids: list[str] = []
    titles: list[str | None] = []
    years: list[int | None] = []
    for _ in range(n_docs):
        doc_ids.append(reader.vstr())
        flags = reader.byte()
        titles.append(reader.vstr() if flags & 1 else None)
        years.append(_unzigzag(reader.varint()) if flags & 2 else None)

    postings: dict[str, list[int]] = {}
    for _ in range(n_keys):
        key = reader.vstr()
        df = reader.varint()
        if df < 1:
            raise CorruptIndexError("corrupt index")
        docs: list[int] = []
        prev = -1
        for _ in range(df):
            gap = reader.varint()
            ordinal = gap if prev < 0 else prev + 1 + gap
            if ordinal >= n_docs:
                raise CorruptIndexError("corrupt index")
            docs.append(ordinal)
            prev = ordinal
        postings[key] = docs
    if not reader.done():
        raise CorruptIndexError("corrupt index")

    # Forward lists are the transpose of postings; rebuilding them here is
    # exact because both sides are sorted deterministically.
    forward: list[list[str]] = [[] for _ in range(n_docs)]
    for key in sorted(postings):
        for ordinal in postings[key]:
            forward[ordinal].append(key)

    return CoMentionIndex(mode, doc_ids, titles, years, postings, forward)


def save_index(index: CoMentionIndex, path) -> None:
    """Write the index file: versioned header, sha256 digest, delta-coded body."""
    body = _encode_body(index)
    digest = hashlib.sha256(body).digest()
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<I", INDEX_FORMAT_VERSION))
        fh.write(digest)
        fh.write(body)


def load_index(path) -> CoMentionIndex:
    """Load an index file, verifying version and payload checksum."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < len(_MAGIC) + 4 + 32:
        raise CorruptIndexError("corrupt index")
    if blob[: len(_MAGIC)] != _MAGIC:
        raise CorruptIndexError("corrupt index")
    offset = len(_MAGIC)
    (version,) = struct.unpack_from("<I", blob, offset)
    if version != INDEX_FORMAT_VERSION:
        raise UnsupportedVersionError(f"unsupported index version: {version}")
    offset += 4
    digest = blob[offset : offset + 32]
    body = blob[offset + 32 :]
    if hashlib.sha256(body).digest() != digest:
        raise CorruptIndexError("corrupt index")
    return _decode_body(body)
