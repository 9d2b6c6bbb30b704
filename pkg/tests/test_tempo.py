"""Tempo estimation on synthetic click tracks."""

import pytest

from msrkit.exceptions import AudioInputError
from msrkit.stretch import stretch, stretched_tempo
from msrkit.tempo import BPM_CEILING, TempoEstimate, estimate_tempo, octave_fold

from signals import SR, click_track, sine_clip
import numpy as np

from msrkit.audio import AudioClip


@pytest.mark.parametrize("bpm", [60, 120, 180])
def test_click_tempo_within_two_bpm(bpm):
    estimate = estimate_tempo(click_track(bpm))
    assert abs(estimate.bpm - bpm) <= 2.0


def test_fast_clicks_fold_into_ceiling():
    estimate = estimate_tempo(click_track(240))
    assert abs(estimate.bpm - 120.0) <= 2.0


def test_confidence_bounded_and_high_for_clean_clicks():
    estimate = estimate_tempo(click_track(120))
    assert 0.0 <= estimate.confidence <= 1.0
    assert estimate.confidence > 0.5


@pytest.mark.parametrize(
    "bpm,expected",
    [(240.0, 120.0), (400.0, 200.0), (90.0, 90.0), (200.0, 200.0), (801.0, 100.125)],
)
def test_octave_fold(bpm, expected):
    assert octave_fold(bpm) == pytest.approx(expected)
    assert octave_fold(bpm) <= BPM_CEILING


def test_estimate_matches_inverse_duration_law_spot_check():
    clip = click_track(120)
    t_in = estimate_tempo(clip).bpm
    out = stretch(clip, 0.8)
    t_out = estimate_tempo(out).bpm
    expected = octave_fold(stretched_tempo(t_in, 0.8))
    assert abs(t_out - expected) / expected < 0.03


def test_silence_is_rejected():
    silent = AudioClip(samples=np.zeros(8 * SR), sample_rate_hz=SR)
    with pytest.raises(AudioInputError):
        estimate_tempo(silent)


def test_short_clip_is_rejected():
    with pytest.raises(AudioInputError):
        estimate_tempo(sine_clip(seconds=1.0))


def test_result_type_fields():
    estimate = estimate_tempo(click_track(120))
    assert isinstance(estimate, TempoEstimate)
    assert 0.0 < estimate.bpm <= BPM_CEILING
