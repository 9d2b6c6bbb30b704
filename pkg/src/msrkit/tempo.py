"""Base-tempo (BPM) estimation.

Method: half-wave-rectified spectral flux sampled at ~100 Hz gives an onset
strength envelope; its autocorrelation is searched over lags corresponding to
40-400 BPM; the strongest peak (parabolically refined) gives the period, and
the BPM is octave-folded into (0, 200], the range song tempos live in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from msrkit.audio import AudioClip
from msrkit.exceptions import AudioInputError

MIN_CLIP_SECONDS = 5.0
ENVELOPE_RATE_HZ = 100.0
BPM_SEARCH_LOW = 40.0
BPM_SEARCH_HIGH = 400.0
BPM_CEILING = 200.0


@dataclass(frozen=True)
class TempoEstimate:
    bpm: float
    confidence: float


def octave_fold(bpm: float, ceiling: float = BPM_CEILING) -> float:
    """Halve a BPM value until it falls into (0, ceiling]."""
    while bpm > ceiling:
        bpm /= 2.0
    return bpm


def _onset_envelope(mono: np.ndarray, sample_rate_hz: int) -> tuple[np.ndarray, float]:
    hop = max(1, int(round(sample_rate_hz / ENVELOPE_RATE_HZ)))
    win = 2 * hop
    n_frames = (mono.size - win) // hop + 1
    if n_frames < 2:
        raise AudioInputError("clip too short for an onset envelope")
    idx = np.arange(win)[np.newaxis, :] + hop * np.arange(n_frames)[:, np.newaxis]
    frames = mono[idx] * np.hanning(win)
    spectra = np.abs(np.fft.rfft(frames, axis=1))
    flux = np.maximum(spectra[1:] - spectra[:-1], 0.0).sum(axis=1)
    return flux, sample_rate_hz / hop


def estimate_tempo(clip: AudioClip) -> TempoEstimate:
    """Estimate the base tempo of a clip of at least 5 seconds.

    Deterministic for a fixed clip. Raises AudioInputError for short clips and
    for signals with no onsets (silence, constant tones).
    """
    if clip.duration_seconds < MIN_CLIP_SECONDS:
        raise AudioInputError(
            f"tempo estimation needs >= {MIN_CLIP_SECONDS:.0f} s, got {clip.duration_seconds:.2f} s"
        )
    envelope, env_rate = _onset_envelope(clip.mono(), clip.sample_rate_hz)
    if not np.any(envelope > 0.0):
        raise AudioInputError("no onsets detected; cannot estimate tempo")

    env = envelope - envelope.mean()
    acf = np.correlate(env, env, mode="full")[env.size - 1:]
    if acf[0] <= 0.0:
        raise AudioInputError("no onsets detected; cannot estimate tempo")

    lag_min = max(1, int(math.ceil(env_rate * 60.0 / BPM_SEARCH_HIGH)))
    lag_max = min(env.size - 1, int(math.floor(env_rate * 60.0 / BPM_SEARCH_LOW)))
    if lag_max <= lag_min:
        raise AudioInputError("clip too short to search the 40-400 BPM lag range")

    lag = lag_min + int(np.argmax(acf[lag_min:lag_max + 1]))
    period, peak_value = _descend_to_fundamental(acf, lag, lag_min)

    bpm = octave_fold(60.0 * env_rate / period)
    confidence = float(min(1.0, max(0.0, peak_value / acf[0])))
    return TempoEstimate(bpm=bpm, confidence=confidence)


def _refine_peak(acf: np.ndarray, lag: int) -> tuple[float, float]:
    """Parabolic interpolation of an integer ACF peak -> (fractional lag, height)."""
    if lag <= 0 or lag >= acf.size - 1:
        return float(lag), float(acf[lag])
    left, mid, right = acf[lag - 1], acf[lag], acf[lag + 1]
    denom = left - 2.0 * mid + right
    if denom == 0.0:
        return float(lag), float(mid)
    shift = max(-0.5, min(0.5, 0.5 * (left - right) / denom))
    return lag + shift, float(mid - 0.25 * (left - right) * shift)


def _descend_to_fundamental(acf: np.ndarray, lag: int, lag_min: int) -> tuple[float, float]:
    """Prefer the beat period over its multiples.

    A beat period that is a non-integer number of envelope frames smears its
    ACF peak across two bins, so an integer multiple of the period can carry
    the global maximum. If lag/d (d = 4, 3, 2) holds a comparable local peak,
    the refined sub-lag is the fundamental period.
    """
    base_lag, base_value = _refine_peak(acf, lag)
    for d in (4, 3, 2):
        center = int(round(base_lag / d))
        if center < max(1, lag_min):
            continue
        lo = max(1, center - 2)
        hi = min(acf.size - 2, center + 2)
        if hi < lo:
            continue
        cand = lo + int(np.argmax(acf[lo:hi + 1]))
        if not (acf[cand] >= acf[cand - 1] and acf[cand] >= acf[cand + 1]):
            continue
        sub_lag, sub_value = _refine_peak(acf, cand)
        if sub_value >= 0.55 * base_value and abs(sub_lag * d - base_lag) <= float(d):
            return sub_lag, sub_value
    return base_lag, base_value
