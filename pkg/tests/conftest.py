from __future__ import annotations

import pytest

from pennant.index import build_index
from pennant.ingest import DocumentRecord

from corpora import corpus6_records, descriptor_records


@pytest.fixture
def corpus6():
    return corpus6_records()


@pytest.fixture
def citation_index(corpus6):
    return build_index(corpus6, "citation")


@pytest.fixture
def descriptor_index():
    return build_index(descriptor_records(), "descriptor")


@pytest.fixture
def single_doc_index():
    return build_index([DocumentRecord(doc_id="x", references=["W"])], "citation")
