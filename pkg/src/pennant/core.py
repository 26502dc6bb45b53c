"""Pennant scoring: co-mention counts -> two-axis diagram with A/B/C sectors.

For a seed s and candidate c over a corpus of N documents:

    tf   = number of documents mentioning both s and c
    df   = number of documents mentioning c at all
    ce   = log_base(tf)              (cognitive effect, x axis)
    ease = log_base(N / df)          (default idf style), or
           log_base(1 / df)          (inverse_df style)

"ease" is the negation of predicted processing effort: higher means the
candidate takes less effort to connect to the seed, so the most relevant
material sits up and to the right. tf <= df confines every point under the
line ce + ease = log_base(N), which gives the diagram its pennant shape.

Sectors partition the ease axis by specificity: A (top) holds "see also"
grade material, B and C progressively broader. The default boundary policy
cuts the achievable ease range into three equal bands.
"""
from __future__ import annotations

import heapq
import math
from collections import Counter
from dataclasses import dataclass, field, replace

from .errors import SeedNotFoundError
from .index import MODES, CoMentionIndex

__all__ = [
    "IDF_STYLES",
    "SECTOR_POLICIES",
    "PennantConfig",
    "PennantPoint",
    "PennantDiagram",
    "build_pennant",
    "candidates",
    "classify_sector",
    "ease_range",
    "score",
    "sector_bounds_for",
]

IDF_STYLES = ("n_over_df", "inverse_df")
SECTOR_POLICIES = ("terciles_of_range", "absolute")


@dataclass(frozen=True)
class PennantConfig:
    """Tunable choices behind a pennant build.

    mode is optional; when unset it is adopted from the index at build time.
    sector_bounds is required for (and only for) the absolute policy.
    """

    mode: str | None = None
    k: int = 100
    min_tf: int = 1
    log_base: float = 2.0
    idf_style: str = "n_over_df"
    sector_policy: str = "terciles_of_range"
    sector_bounds: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if self.mode is not None and self.mode not in MODES:
            raise ValueError(f"unknown mode: {self.mode!r}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.min_tf < 1:
            raise ValueError("min_tf must be >= 1")
        if not self.log_base > 1:
            raise ValueError("log_base must be > 1")
        if self.idf_style not in IDF_STYLES:
            raise ValueError(f"unknown idf_style: {self.idf_style!r}")
        if self.sector_policy not in SECTOR_POLICIES:
            raise ValueError(f"unknown sector_policy: {self.sector_policy!r}")
        if self.sector_policy == "absolute":
            if self.sector_bounds is None:
                raise ValueError("absolute sector policy requires sector_bounds")
            b1, b2 = self.sector_bounds
            if not (0 <= b1 < b2):
                raise ValueError("sector_bounds must satisfy 0 <= b1 < b2")
            object.__setattr__(self, "sector_bounds", (float(b1), float(b2)))
        elif self.sector_bounds is not None:
            raise ValueError("sector_bounds only apply to the absolute policy")


@dataclass(frozen=True)
class PennantPoint:
    """One candidate on the diagram. title is display-only enrichment."""

    candidate: str
    tf: int
    df: int
    ce: float
    ease: float
    sector: str
    title: str | None = None


@dataclass(frozen=True)
class PennantDiagram:
    seed: str
    mode: str
    config: PennantConfig
    n_docs: int
    sector_bounds: tuple[float, float]
    axis_max: tuple[float, float]
    points: list[PennantPoint] = field(default_factory=list)


def candidates(index: CoMentionIndex, seed: str) -> list[tuple[str, int]]:
    """All mention ids co-occurring with the seed, with exact tf counts.

    Computed by unioning the forward lists of the seed's mentioning documents
    and counting; the seed itself is excluded. Sorted by candidate id.
    """
    seed_docs = index.postings.get(seed)
    if seed_docs is None:
        raise SeedNotFoundError("seed not found")
    counts: Counter[str] = Counter()
    forward = index.forward
    for ordinal in seed_docs:
        counts.update(forward[ordinal])
    del counts[seed]
    return sorted(counts.items())


def score(tf: int, df: int, n_docs: int, config: PennantConfig) -> tuple[float, float]:
    """Map raw counts to (cognitive effect, ease of processing).

    Preconditions are enforced, never clamped: 1 <= tf <= df <= n_docs.
    """
    if not 1 <= tf <= df <= n_docs:
        raise ValueError(f"invalid counts: tf={tf}, df={df}, n_docs={n_docs}")
    base = config.log_base
    ce = math.log(tf, base)
    if config.idf_style == "n_over_df":
        ease = math.log(n_docs / df, base)
    else:
        ease = math.log(1.0 / df, base)
    return ce, ease


def ease_range(n_docs: int, config: PennantConfig) -> tuple[float, float]:
    """Achievable ease interval for df in [1, n_docs] under the idf style."""
    axis = math.log(n_docs, config.log_base)
    if config.idf_style == "n_over_df":
        return 0.0, axis
    return -axis, 0.0


def sector_bounds_for(config: PennantConfig, n_docs: int) -> tuple[float, float]:
    """Resolve the (b1, b2) ease boundaries the sector policy prescribes.

    terciles_of_range cuts the achievable ease range into three equal bands;
    for the inverse_df style that range is [-log_base(N), 0], shifted by the
    same constant that shifts every ease value.
    """
    if config.sector_policy == "absolute":
        assert config.sector_bounds is not None
        return config.sector_bounds
    low, high = ease_range(n_docs, config)
    span = high - low
    return low + span / 3, low + 2 * span / 3


def classify_sector(ease: float, sector_bounds: tuple[float, float]) -> str:
    """A above b2, B in [b1, b2), C below b1. Closed on each upper sector's lower edge."""
    b1, b2 = sector_bounds
    if ease >= b2:
        return "A"
    if ease >= b1:
        return "B"
    return "C"


def build_pennant(index: CoMentionIndex, seed: str, config: PennantConfig) -> PennantDiagram:
    """Score, rank, classify and truncate the seed's co-mention candidates.

    Ranking is (ce desc, ease desc, candidate asc). A known seed with zero
    admissible candidates yields an empty diagram, not an error.
    """
    if config.mode is not None and config.mode != index.mode:
        raise ValueError(f"config mode {config.mode!r} does not match index mode {index.mode!r}")
    config = replace(config, mode=index.mode)

    seed_docs = index.postings.get(seed)
    if seed_docs is None:
        raise SeedNotFoundError("seed not found")

    counts: Counter[str] = Counter()
    forward = index.forward
    for ordinal in seed_docs:
        counts.update(forward[ordinal])
    del counts[seed]

    postings = index.postings
    n_docs = index.n_docs
    min_tf = config.min_tf
    admitted = [
        (tf, len(postings[cand]), cand) for cand, tf in counts.items() if tf >= min_tf
    ]
    # (ce desc, ease desc, id asc) == (tf desc, df asc, id asc): log is strictly
    # monotone and both styles make ease strictly decreasing in df, so ranking
    # on the integer counts avoids scoring candidates the cutoff discards.
    top = heapq.nsmallest(config.k, admitted, key=lambda item: (-item[0], item[1], item[2]))

    bounds = sector_bounds_for(config, n_docs)
    points = []
    for tf, df, cand in top:
        ce, ease = score(tf, df, n_docs, config)
        points.append(
            PennantPoint(
                candidate=cand,
                tf=tf,
                df=df,
                ce=ce,
                ease=ease,
                sector=classify_sector(ease, bounds),
                title=index.title_of(cand),
            )
        )

    axis = math.log(n_docs, config.log_base)
    return PennantDiagram(
        seed=seed,
        mode=index.mode,
        config=config,
        n_docs=n_docs,
        sector_bounds=bounds,
        axis_max=(axis, axis),
        points=points,
    )
