"""End-to-end acceptance checks.

Each test covers one release criterion at its stated tolerance and prints a
single PASS/FAIL line (visible with pytest -s or in failure reports).
"""

import math
import random
import statistics
import time
from collections import Counter
from contextlib import contextmanager

import numpy as np

from msrkit.analytics import (
    RectRelation,
    anova_one_way,
    classify_point,
    genre_stats,
    msr_rectangle,
    rect_relation,
    regress_tempo_to_alpha,
    similarity_matrix,
)
from msrkit.data import CatalogEntry, ExperimentStore, SongRecord, vote_alpha
from msrkit.stretch import SolaConfig, grid_rates, stretch, stretched_tempo
from msrkit.tempo import estimate_tempo, octave_fold

import reference_data as ref
from signals import SR, click_track, dominant_frequency, noise_clip, sine_clip


@contextmanager
def _criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL: {name}")
        raise
    print(f"PASS: {name}")


def test_similarity_matrix_reproduction():
    with _criterion("similarity matrix reproduction (55 entries within 0.005, <1s)"):
        start = time.perf_counter()
        stats = ref.reference_stats()
        genres, matrix = similarity_matrix(stats)
        elapsed = time.perf_counter() - start
        assert genres == ref.GENRES
        for i in range(11):
            for j in range(i + 1, 11):
                expected = ref.similarity_expected(i, j)
                assert abs(matrix[i, j] - expected) <= 0.005, (genres[i], genres[j])
        anchors = {
            ("Pop", "Rock"): 0.713,
            ("Folk", "Latin"): 0.808,
            ("Easy Listening", "Electronic"): 0.748,
            ("Rock", "Hip-hop&Rap"): 0.244,
            ("Pop", "Classical"): 0.0,
        }
        index = {g: i for i, g in enumerate(genres)}
        for (a, b), value in anchors.items():
            assert abs(matrix[index[a], index[b]] - value) <= 0.005, (a, b)
        assert np.all(np.diag(matrix) == 1.0)
        assert elapsed < 1.0, f"similarity matrix took {elapsed:.3f}s"


def test_rectangle_relationship_taxonomy():
    with _criterion("rectangle relationship taxonomy (inclusion and exclusion sets exact)"):
        rects = {g: msr_rectangle(s) for g, s in ref.reference_stats().items()}
        inclusion = set()
        exclusion = set()
        for i, a in enumerate(ref.GENRES):
            for b in ref.GENRES[i + 1:]:
                relation = rect_relation(rects[a], rects[b])
                if relation is RectRelation.INCLUSION:
                    inclusion.add(frozenset({a, b}))
                elif relation is RectRelation.EXCLUSION:
                    exclusion.add(frozenset({a, b}))
        assert inclusion == ref.INCLUSION_PAIRS
        assert exclusion == ref.EXCLUSION_PAIRS


def test_time_stretch_properties():
    with _criterion(
        "time-stretch properties (duration law on 98 rates, pitch within 1%, "
        "unity identity 1e-6, determinism, <30s)"
    ):
        start = time.perf_counter()
        frame = SolaConfig().frame_samples(SR)

        ten_seconds = noise_clip(seconds=10.0, seed=42)
        for rate in grid_rates():
            out = stretch(ten_seconds, rate)
            assert abs(out.n_samples - round(rate * ten_seconds.n_samples)) <= frame, rate

        tone = sine_clip(freq=440.0, seconds=4.0)
        for rate in (0.5, 0.8, 1.2, 1.5, 1.98):
            freq = dominant_frequency(stretch(tone, rate))
            assert abs(freq - 440.0) / 440.0 < 0.01, rate

        clip = noise_clip(seconds=2.0, seed=43)
        unity = stretch(clip, 1.0)
        interior = slice(frame, clip.n_samples - frame)
        assert np.max(np.abs(unity.samples[:, interior] - clip.samples[:, interior])) < 1e-6

        again = stretch(ten_seconds, 0.76)
        assert np.array_equal(again.samples, stretch(ten_seconds, 0.76).samples)

        elapsed = time.perf_counter() - start
        assert elapsed < 30.0, f"stretch suite took {elapsed:.1f}s"


def test_tempo_rate_consistency():
    with _criterion("tempo/rate consistency (60/120/180 BPM x {0.5, 0.8, 1.25} within 3%)"):
        for bpm in (60, 120, 180):
            clip = click_track(bpm)
            tempo_in = estimate_tempo(clip).bpm
            for rate in (0.5, 0.8, 1.25):
                tempo_out = estimate_tempo(stretch(clip, rate)).bpm
                expected = octave_fold(stretched_tempo(tempo_in, rate))
                assert abs(tempo_out - expected) / expected < 0.03, (bpm, rate)


def test_anova_correctness():
    with _criterion(
        "ANOVA correctness (anchor F=13.5, oracle to 1e-9 on 100 instances, "
        "df (10, 883) with p<0.001 on moment-matched data)"
    ):
        anchor = anova_one_way({"a": [1, 2, 3], "b": [4, 5, 6]})
        assert math.isclose(anchor.f_value, 13.5, rel_tol=1e-12)
        assert (anchor.df_between, anchor.df_within) == (1, 4)

        rng = np.random.default_rng(1234)
        for _ in range(100):
            groups = {
                f"g{i}": list(rng.normal(rng.uniform(-1, 1), 1.0, rng.integers(2, 10)))
                for i in range(rng.integers(2, 6))
            }
            ours = anova_one_way(groups)
            values = [v for vs in groups.values() for v in vs]
            grand = sum(values) / len(values)
            ss_between = sum(
                len(vs) * ((sum(vs) / len(vs)) - grand) ** 2 for vs in groups.values()
            )
            ss_within = sum(
                (v - sum(vs) / len(vs)) ** 2 for vs in groups.values() for v in vs
            )
            expected = (ss_between / (len(groups) - 1)) / (
                ss_within / (len(values) - len(groups))
            )
            assert math.isclose(ours.f_value, expected, rel_tol=1e-9)

        records = ref.moment_matched_records(seed=2026)
        groups_min = {}
        for rec in records:
            groups_min.setdefault(rec.genre, []).append(rec.alpha_min)
        result = anova_one_way(groups_min)
        assert (result.df_between, result.df_within) == (10, 883)
        assert sum(len(v) for v in groups_min.values()) == ref.TOTAL_COUNT
        assert result.p_value < 0.001
        assert result.f_value > 0.0


def test_regression_correctness():
    with _criterion(
        "regression correctness (exact collinear slope, normal-equation oracle "
        "to 1e-9, reference slopes displace alpha by <0.1 over 200 BPM)"
    ):
        collinear = [
            SongRecord("a", "Pop", 100.0, 0.70, 1.30),
            SongRecord("b", "Pop", 150.0, 0.75, 1.25),
            SongRecord("c", "Pop", 200.0, 0.80, 1.20),
        ]
        line = regress_tempo_to_alpha(collinear, bound="min")["Pop"]
        assert math.isclose(line.slope, 1e-3, rel_tol=1e-9)

        rng = np.random.default_rng(77)
        tempos = rng.uniform(60, 200, 60)
        alphas = np.clip(0.6 + 5e-4 * tempos + 0.02 * rng.standard_normal(60), 0.05, 0.95)
        noisy = [
            SongRecord(f"n{i}", "Rock", float(t), float(a), 1.5)
            for i, (t, a) in enumerate(zip(tempos, alphas))
        ]
        fitted = regress_tempo_to_alpha(noisy, bound="min")["Rock"]
        design = np.vstack([tempos, np.ones_like(tempos)]).T
        slope, intercept = np.linalg.solve(design.T @ design, design.T @ alphas)
        assert math.isclose(fitted.slope, slope, rel_tol=1e-9)
        assert math.isclose(fitted.intercept, intercept, rel_tol=1e-9)

        for slope_min, slope_max in ref.REFERENCE_SLOPES.values():
            assert abs(slope_min) * 200.0 < 0.1
            assert abs(slope_max) * 200.0 < 0.1


def test_partition_suite():
    with _criterion(
        "partition suite (200x200 grid total and single-valued, class sets "
        "exact, safe region below-right of the rectangle)"
    ):
        rect = msr_rectangle(ref.reference_stats()["Pop"])
        xs = np.linspace(0.0025, 0.9975, 200)
        ys = np.linspace(1.0025, 1.9975, 200)
        seen_parts = set()
        labels_by_part = {}
        for x in xs:
            for y in ys:
                region = classify_point(rect, (float(x), float(y)))
                assert 1 <= region.part <= 9
                seen_parts.add(region.part)
                labels_by_part.setdefault(region.part, region.label)
                assert labels_by_part[region.part] == region.label
                if region.label == "safe":
                    assert x > rect.x_hi and y < rect.y_lo
        assert seen_parts == set(range(1, 10))
        assert {p for p, l in labels_by_part.items() if l == "dangerous"} == {1, 2, 3, 4, 7}
        assert {p for p, l in labels_by_part.items() if l == "transition"} == {5, 6, 8}
        assert {p for p, l in labels_by_part.items() if l == "safe"} == {9}


def test_aggregation_and_persistence(tmp_path):
    with _criterion(
        "aggregation and persistence (vote oracle on 1000 sets, journal replay "
        "reconstructs aggregate state)"
    ):
        def oracle(values):
            ks = [round(v * 50) for v in values]
            counts = Counter(ks)
            top = max(counts.values())
            tied = sorted(k for k, c in counts.items() if c == top)
            med = statistics.median(tied)
            if med in tied:
                return med / 50.0
            return min(tied, key=lambda k: abs(k - 50)) / 50.0

        rng = random.Random(4242)
        for _ in range(1000):
            lo, hi = rng.choice([(1, 49), (51, 99)])
            values = [rng.randint(lo, hi) / 50.0 for _ in range(rng.randint(1, 15))]
            assert math.isclose(vote_alpha(values), oracle(values)), values

        catalog = {
            f"s{i:02d}": CatalogEntry(f"s{i:02d}", f"/a/{i}.wav", "Pop", 100.0)
            for i in range(25)
        }
        store = ExperimentStore(tmp_path / "j.jsonl", catalog=catalog)
        grid_values = [k / 50.0 for k in range(30, 50, 2)]
        for p in range(5):
            pid = store.add_participant(f"p{p}")
            package = store.assign_package(pid, seed=p)
            for s, song in enumerate(package.song_ids[:8]):
                alpha_min = grid_values[(p + s) % len(grid_values)]
                store.record_judgment(pid, song, alpha_min, round(2.5 - alpha_min, 2))
        before = [
            (r.song_id, r.alpha_min, r.alpha_max) for r in store.aggregate()
        ]
        replayed = ExperimentStore(tmp_path / "j.jsonl", catalog=catalog)
        after = [
            (r.song_id, r.alpha_min, r.alpha_max) for r in replayed.aggregate()
        ]
        assert before == after
        assert before, "aggregate state must be non-empty"
