"""Naive quadratic reference implementation used to verify the indexed path.

Everything here recomputes from raw records: counts by scanning per-document
mention sets, scores through a different floating-point expression tree
(log2/log10 where available, log differences instead of quotient logs),
ranking and classification from scratch. Nothing is imported from the
scoring or indexing modules under test.

Note on sectors: classification is discontinuous, so two float paths can
legitimately disagree when a point sits exactly on a tercile boundary
(possible only when the document count is a perfect cube). Corpora fed to
the equivalence sweep avoid cube counts, making exact sector comparison
well-posed; for non-cube counts the boundary gap is bounded below by
~1e-8, orders of magnitude above float noise.
"""
from __future__ import annotations

import math

from pennant.ingest import DocumentRecord


def mention_sets(records: list[DocumentRecord], mode: str) -> list[set[str]]:
    if mode == "citation":
        return [set(rec.references) for rec in records]
    return [set(rec.descriptors) for rec in records]


def all_keys(records: list[DocumentRecord], mode: str) -> list[str]:
    keys: set[str] = set()
    for mentions in mention_sets(records, mode):
        keys |= mentions
    return sorted(keys)


def naive_df(doc_sets: list[set[str]], key: str) -> int:
    return sum(1 for mentions in doc_sets if key in mentions)


def naive_tf(doc_sets: list[set[str]], a: str, b: str) -> int:
    return sum(1 for mentions in doc_sets if a in mentions and b in mentions)


def oracle_log(x: float, base: float) -> float:
    if base == 2:
        return math.log2(x)
    if base == 10:
        return math.log10(x)
    return math.log(x) / math.log(base)


def oracle_score(tf: int, df: int, n_docs: int, base: float, idf_style: str) -> tuple[float, float]:
    ce = oracle_log(tf, base)
    if idf_style == "n_over_df":
        ease = oracle_log(n_docs, base) - oracle_log(df, base)
    else:
        ease = -oracle_log(df, base)
    return ce, ease


def oracle_bounds(
    n_docs: int,
    base: float,
    idf_style: str,
    policy: str = "terciles_of_range",
    absolute: tuple[float, float] | None = None,
) -> tuple[float, float]:
    if policy == "absolute":
        assert absolute is not None
        return absolute
    axis = oracle_log(n_docs, base)
    if idf_style == "n_over_df":
        return axis / 3, 2 * axis / 3
    return -2 * axis / 3, -axis / 3


def oracle_sector(ease: float, bounds: tuple[float, float]) -> str:
    b1, b2 = bounds
    if ease >= b2:
        return "A"
    if ease >= b1:
        return "B"
    return "C"


def oracle_pennant(
    records: list[DocumentRecord],
    mode: str,
    seed: str,
    k: int = 100,
    min_tf: int = 1,
    base: float = 2.0,
    idf_style: str = "n_over_df",
    policy: str = "terciles_of_range",
    absolute: tuple[float, float] | None = None,
):
    """Full reference pennant: list of (id, tf, df, ce, ease, sector) plus bounds."""
    doc_sets = mention_sets(records, mode)
    n_docs = len(records)
    bounds = oracle_bounds(n_docs, base, idf_style, policy, absolute)

    points = []
    for key in all_keys(records, mode):
        if key == seed:
            continue
        tf = naive_tf(doc_sets, seed, key)
        if tf < min_tf:
            continue
        df = naive_df(doc_sets, key)
        ce, ease = oracle_score(tf, df, n_docs, base, idf_style)
        points.append((key, tf, df, ce, ease, oracle_sector(ease, bounds)))

    points.sort(key=lambda p: (-p[3], -p[4], p[0]))
    return points[:k], bounds
