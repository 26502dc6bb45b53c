"""Shared corpus fixtures and random corpus generation for tests."""
from __future__ import annotations

import random

from pennant.ingest import DocumentRecord, to_jsonl_line

# Six-document fixture used across the suite; every expected count below was
# frozen from the naive oracle in oracle.py (see test_oracle_selfcheck).
CORPUS6_REFS = {
    "d1": ["S", "A"],
    "d2": ["S", "A", "B"],
    "d3": ["S", "B"],
    "d4": ["A"],
    "d5": ["B", "C"],
    "d6": ["S", "C"],
}


def corpus6_records() -> list[DocumentRecord]:
    return [DocumentRecord(doc_id=doc_id, references=refs) for doc_id, refs in CORPUS6_REFS.items()]


def corpus6_jsonl() -> bytes:
    lines = [to_jsonl_line(record) for record in corpus6_records()]
    return ("\n".join(lines) + "\n").encode("utf-8")


def descriptor_records() -> list[DocumentRecord]:
    """Same co-mention structure as CORPUS-6, expressed through descriptors."""
    return [
        DocumentRecord(doc_id=doc_id, descriptors=refs, title=f"Title {doc_id}", year=2000 + i)
        for i, (doc_id, refs) in enumerate(CORPUS6_REFS.items())
    ]


def random_records(
    rng: random.Random,
    max_docs: int = 200,
    max_keys: int = 50,
    forbid_cube_n: bool = False,
) -> list[DocumentRecord]:
    """Random corpus within the acceptance sweep caps.

    forbid_cube_n skips perfect-cube document counts: for those, tercile
    sector boundaries can coincide exactly with achievable ease values, and
    classification of a knife-edge point is not comparable across
    independent float paths (see oracle.py).
    """
    while True:
        n_docs = rng.randint(1, max_docs)
        if not forbid_cube_n or round(n_docs ** (1 / 3)) ** 3 != n_docs:
            break
    n_keys = rng.randint(1, max_keys)
    keys = [f"w{i}" for i in range(n_keys)]
    records = []
    for i in range(n_docs):
        count = rng.randint(0, min(n_keys, 8))
        records.append(DocumentRecord(doc_id=f"d{i}", references=sorted(rng.sample(keys, count))))
    return records
