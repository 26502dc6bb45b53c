from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pennant.core import (
    PennantConfig,
    build_pennant,
    candidates,
    classify_sector,
    score,
    sector_bounds_for,
)
from pennant.errors import SeedNotFoundError
from pennant.index import build_index
from pennant.ingest import DocumentRecord

from corpora import random_records
from oracle import oracle_pennant

BASE2 = PennantConfig()


class TestConfigValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"k": 0},
            {"min_tf": 0},
            {"log_base": 1.0},
            {"log_base": 0.5},
            {"idf_style": "bm25"},
            {"sector_policy": "quartiles"},
            {"mode": "authors"},
            {"sector_policy": "absolute"},
            {"sector_policy": "absolute", "sector_bounds": (2.0, 1.0)},
            {"sector_policy": "absolute", "sector_bounds": (-1.0, 1.0)},
            {"sector_bounds": (0.5, 1.0)},
        ],
    )
    def test_invalid_configs(self, kwargs):
        with pytest.raises(ValueError):
            PennantConfig(**kwargs)

    def test_defaults(self):
        cfg = PennantConfig()
        assert (cfg.k, cfg.min_tf, cfg.log_base) == (100, 1, 2.0)
        assert cfg.idf_style == "n_over_df"
        assert cfg.sector_policy == "terciles_of_range"


class TestScore:
    def test_fixture_pair(self):
        assert score(2, 3, 6, BASE2) == (1.0, 1.0)

    def test_ubiquitous_candidate(self):
        assert score(1, 6, 6, BASE2) == (0.0, 0.0)

    def test_apex_direction(self):
        ce, ease = score(1, 1, 6, BASE2)
        assert ce == 0.0
        assert ease == pytest.approx(math.log2(6), abs=1e-12)

    def test_inverse_df_style(self):
        cfg = PennantConfig(idf_style="inverse_df")
        ce, ease = score(2, 4, 6, cfg)
        assert ce == 1.0
        assert ease == pytest.approx(-2.0, abs=1e-12)

    @pytest.mark.parametrize("tf,df,n", [(0, 1, 2), (3, 2, 6), (2, 7, 6), (-1, 1, 2)])
    def test_domain_errors_never_clamp(self, tf, df, n):
        with pytest.raises(ValueError, match="invalid counts"):
            score(tf, df, n, BASE2)

    def test_idf_style_shift_constant(self):
        n = 37
        shift = math.log(n, 2)
        for df in range(1, n + 1):
            _, ease_n = score(1, df, n, BASE2)
            _, ease_inv = score(1, df, n, PennantConfig(idf_style="inverse_df"))
            assert ease_inv == pytest.approx(ease_n - shift, abs=1e-12)


class TestSectors:
    BOUNDS6 = sector_bounds_for(BASE2, 6)

    def test_tercile_bounds_fixture(self):
        b1, b2 = self.BOUNDS6
        assert b1 == pytest.approx(0.8616541669070521, abs=1e-12)
        assert b2 == pytest.approx(1.7233083338141042, abs=1e-12)

    def test_classify_examples(self):
        assert classify_sector(2.0, self.BOUNDS6) == "A"
        assert classify_sector(1.0, self.BOUNDS6) == "B"
        assert classify_sector(0.0, self.BOUNDS6) == "C"

    def test_boundaries_closed_on_upper_sectors(self):
        assert classify_sector(1.0, (0.5, 1.0)) == "A"
        assert classify_sector(0.5, (0.5, 1.0)) == "B"
        assert classify_sector(0.4999999, (0.5, 1.0)) == "C"

    def test_absolute_policy_bounds(self):
        cfg = PennantConfig(sector_policy="absolute", sector_bounds=(0.25, 2.5))
        assert sector_bounds_for(cfg, 6) == (0.25, 2.5)

    def test_inverse_df_terciles_cover_negative_range(self):
        cfg = PennantConfig(idf_style="inverse_df")
        b1, b2 = sector_bounds_for(cfg, 8)
        assert b1 == pytest.approx(-2.0, abs=1e-12)
        assert b2 == pytest.approx(-1.0, abs=1e-12)

    @given(st.floats(-10, 10), st.floats(-5, 0), st.floats(0.001, 5))
    def test_partition_exhaustive_and_exclusive(self, ease, b1, width):
        bounds = (b1, b1 + width)
        sector = classify_sector(ease, bounds)
        memberships = [
            sector == "A" and ease >= bounds[1],
            sector == "B" and bounds[0] <= ease < bounds[1],
            sector == "C" and ease < bounds[0],
        ]
        assert sum(memberships) == 1


class TestCandidates:
    def test_seed_s(self, citation_index):
        assert candidates(citation_index, "S") == [("A", 2), ("B", 2), ("C", 1)]

    def test_seed_c(self, citation_index):
        assert candidates(citation_index, "C") == [("B", 1), ("S", 1)]

    def test_lonely_seed_has_no_candidates(self, single_doc_index):
        assert candidates(single_doc_index, "W") == []

    def test_unknown_seed(self, citation_index):
        with pytest.raises(SeedNotFoundError, match="seed not found"):
            candidates(citation_index, "NOPE")


class TestBuildPennant:
    def test_fixture_diagram(self, citation_index):
        diagram = build_pennant(citation_index, "S", BASE2)
        assert [p.candidate for p in diagram.points] == ["A", "B", "C"]
        expected = [("A", 2, 3, 1.0, 1.0, "B"), ("B", 2, 3, 1.0, 1.0, "B")]
        for point, (cand, tf, df, ce, ease, sector) in zip(diagram.points, expected):
            assert (point.candidate, point.tf, point.df) == (cand, tf, df)
            assert point.ce == pytest.approx(ce, abs=1e-12)
            assert point.ease == pytest.approx(ease, abs=1e-12)
            assert point.sector == sector
        last = diagram.points[2]
        assert (last.candidate, last.tf, last.df, last.sector) == ("C", 1, 2, "B")
        assert last.ce == 0.0
        assert last.ease == pytest.approx(math.log2(3), abs=1e-12)
        assert diagram.n_docs == 6
        assert diagram.mode == "citation"
        assert diagram.config.mode == "citation"

    def test_min_tf_filters(self, citation_index):
        diagram = build_pennant(citation_index, "S", PennantConfig(min_tf=2))
        assert [p.candidate for p in diagram.points] == ["A", "B"]

    def test_k_truncates_after_ranking(self, citation_index):
        diagram = build_pennant(citation_index, "S", PennantConfig(k=1))
        assert [p.candidate for p in diagram.points] == ["A"]

    def test_empty_diagram_not_error(self, single_doc_index):
        diagram = build_pennant(single_doc_index, "W", BASE2)
        assert diagram.points == []
        assert diagram.sector_bounds == (0.0, 0.0)

    def test_seed_never_appears(self, citation_index):
        for seed in ["S", "A", "B", "C"]:
            diagram = build_pennant(citation_index, seed, BASE2)
            assert seed not in [p.candidate for p in diagram.points]

    def test_unknown_seed(self, citation_index):
        with pytest.raises(SeedNotFoundError):
            build_pennant(citation_index, "NOPE", BASE2)

    def test_mode_mismatch_detected(self, citation_index):
        with pytest.raises(ValueError, match="mode"):
            build_pennant(citation_index, "S", PennantConfig(mode="descriptor"))

    def test_config_mode_adopted_from_index(self, descriptor_index):
        diagram = build_pennant(descriptor_index, "S", BASE2)
        assert diagram.config.mode == "descriptor"

    def test_titles_attached_when_candidate_is_a_document(self):
        records = [
            DocumentRecord(doc_id="p1", title="Paper one", references=["p2", "w", "q"]),
            DocumentRecord(doc_id="p2", title="Paper two", references=["w"]),
            DocumentRecord(doc_id="p3", references=["p2", "w"]),
        ]
        index = build_index(records, "citation")
        diagram = build_pennant(index, "w", BASE2)
        by_id = {p.candidate: p for p in diagram.points}
        assert by_id["p2"].title == "Paper two"
        assert by_id["q"].title is None

    def test_determinism_same_inputs_same_output(self, citation_index):
        a = build_pennant(citation_index, "S", BASE2)
        b = build_pennant(citation_index, "S", BASE2)
        assert a == b

    def test_rank_and_sector_invariant_under_log_base(self, citation_index):
        factor = math.log(2) / math.log(10)
        for seed in ["S", "A", "B", "C"]:
            d2 = build_pennant(citation_index, seed, PennantConfig(log_base=2))
            d10 = build_pennant(citation_index, seed, PennantConfig(log_base=10))
            assert [p.candidate for p in d2.points] == [p.candidate for p in d10.points]
            for p2, p10 in zip(d2.points, d10.points):
                assert p10.ce == pytest.approx(p2.ce * factor, abs=1e-12)
                assert p10.ease == pytest.approx(p2.ease * factor, abs=1e-12)
                assert p10.sector == p2.sector

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([1, 2]), st.sampled_from([2.0, 10.0, 3.5]))
    def test_matches_quadratic_oracle(self, seed_value, min_tf, base):
        rng = random.Random(seed_value)
        records = random_records(rng, max_docs=60, max_keys=15, forbid_cube_n=True)
        index = build_index(records, "citation")
        seeds = sorted(index.postings)
        if not seeds:
            return
        seed = rng.choice(seeds)
        config = PennantConfig(min_tf=min_tf, log_base=base)
        diagram = build_pennant(index, seed, config)
        expected, bounds = oracle_pennant(records, "citation", seed, min_tf=min_tf, base=base)
        assert diagram.sector_bounds == pytest.approx(bounds, abs=1e-12)
        assert len(diagram.points) == len(expected)
        for point, (cand, tf, df, ce, ease, sector) in zip(diagram.points, expected):
            assert point.candidate == cand
            assert (point.tf, point.df) == (tf, df)
            assert point.ce == pytest.approx(ce, abs=1e-12)
            assert point.ease == pytest.approx(ease, abs=1e-12)
            assert point.sector == sector

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000))
    def test_pennant_shape_envelope(self, seed_value):
        rng = random.Random(seed_value)
        records = random_records(rng, max_docs=80, max_keys=20)
        index = build_index(records, "citation")
        axis = math.log2(index.n_docs)
        for seed in sorted(index.postings)[:5]:
            diagram = build_pennant(index, seed, BASE2)
            for point in diagram.points:
                assert point.ce + point.ease <= axis + 1e-12
