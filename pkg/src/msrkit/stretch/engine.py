"""Synchronized overlap-add time stretching.

Changes the duration (hence tempo) of a clip by the rate r in (0, 2) while
preserving pitch: analysis frames taken every S_a samples are re-placed at
nominally r-scaled output positions, each placement refined within a seek
window to maximize the normalized cross-correlation between the frame head
and the already-synthesized tail, then merged with a linear crossfade whose
gains sum to one. r < 1 compresses (faster tempo), r > 1 elongates, so the
stretched tempo is t_o / r.

The per-frame loop is the hot path; it lives in a compiled extension
(msrkit.stretch._kernel) with a numpy fallback (_kernel_py) selected at
import time. Set MSRKIT_KERNEL=python|compiled to force one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from msrkit.audio import AudioClip
from msrkit.exceptions import AudioInputError, DomainError
from msrkit.grid import grid_rates, validate_rate

from msrkit.stretch import _kernel_py

try:
    from msrkit.stretch import _kernel as _kernel_compiled
except ImportError:  # extension not built; fallback only
    _kernel_compiled = None

DEFAULT_KERNEL = "compiled" if _kernel_compiled is not None else "python"


def available_kernels() -> tuple[str, ...]:
    return ("compiled", "python") if _kernel_compiled is not None else ("python",)


def active_kernel() -> str:
    """Kernel that stretch() will use, honoring the MSRKIT_KERNEL override."""
    forced = os.environ.get("MSRKIT_KERNEL")
    if forced:
        if forced not in ("compiled", "python"):
            raise DomainError(f"MSRKIT_KERNEL must be 'compiled' or 'python', got {forced!r}")
        if forced == "compiled" and _kernel_compiled is None:
            raise DomainError("MSRKIT_KERNEL=compiled but the extension is not built")
        return forced
    return DEFAULT_KERNEL


def _kernel_module(name: str | None = None):
    name = name or active_kernel()
    if name == "compiled":
        if _kernel_compiled is None:
            raise DomainError("compiled kernel requested but the extension is not built")
        return _kernel_compiled
    if name == "python":
        return _kernel_py
    raise DomainError(f"unknown kernel {name!r}")


@dataclass(frozen=True)
class SolaConfig:
    """Overlap-add parameters, all in milliseconds.

    Defaults follow the common time-stretching library settings: 40 ms frames,
    8 ms crossfade overlap, 15 ms seek half-window. The analysis hop is derived
    as (frame - overlap - seek)/2, which keeps the full seek range usable with
    at least one correlation window of overlap at every rate below 2.
    """

    frame_ms: float = 40.0
    overlap_ms: float = 8.0
    seek_window_ms: float = 15.0

    def __post_init__(self):
        if not 0 < self.overlap_ms < self.frame_ms:
            raise DomainError(
                f"need 0 < overlap_ms < frame_ms, got overlap={self.overlap_ms} frame={self.frame_ms}"
            )
        if self.seek_window_ms < 0:
            raise DomainError(f"seek_window_ms must be >= 0, got {self.seek_window_ms}")
        if self.overlap_ms + self.seek_window_ms >= self.frame_ms:
            raise DomainError("overlap_ms + seek_window_ms must stay below frame_ms")

    def frame_samples(self, sample_rate_hz: int) -> int:
        return int(round(sample_rate_hz * self.frame_ms / 1000.0))

    def overlap_samples(self, sample_rate_hz: int) -> int:
        return max(1, int(round(sample_rate_hz * self.overlap_ms / 1000.0)))

    def seek_samples(self, sample_rate_hz: int) -> int:
        return int(round(sample_rate_hz * self.seek_window_ms / 1000.0))

    def analysis_hop(self, sample_rate_hz: int) -> int:
        n = self.frame_samples(sample_rate_hz)
        hop = (n - self.overlap_samples(sample_rate_hz) - self.seek_samples(sample_rate_hz)) // 2
        if hop < 1:
            raise DomainError(
                f"sample rate {sample_rate_hz} Hz too low for frame/overlap/seek of {self}"
            )
        return hop

    def cache_key(self) -> str:
        return f"f{self.frame_ms:g}_o{self.overlap_ms:g}_s{self.seek_window_ms:g}"


def stretch(clip: AudioClip, rate: float, config: SolaConfig | None = None,
            kernel: str | None = None) -> AudioClip:
    """Stretch clip to duration rate x input duration.

    Output length is exactly round(rate * n); sample rate and channel count
    are unchanged; the result is deterministic for identical inputs. Raises
    DomainError for rates outside (0, 2) and AudioInputError for clips shorter
    than one analysis frame.
    """
    rate = validate_rate(rate)
    config = config or SolaConfig()
    sr = clip.sample_rate_hz
    frame_len = config.frame_samples(sr)
    if frame_len < 2:
        raise DomainError(f"frame of {config.frame_ms} ms is degenerate at {sr} Hz")
    n = clip.n_samples
    if n < frame_len:
        raise AudioInputError(
            f"clip of {n} samples is shorter than one {frame_len}-sample analysis frame"
        )
    corr_len = config.overlap_samples(sr)
    seek = config.seek_samples(sr)
    hop = config.analysis_hop(sr)

    target = int(round(rate * n))
    x = np.ascontiguousarray(clip.samples, dtype=np.float64)
    mono = np.ascontiguousarray(clip.mono(), dtype=np.float64)

    pad = target + frame_len + seek + 2
    out = np.zeros((clip.channels, pad), dtype=np.float64)
    out_mono = np.zeros(pad, dtype=np.float64)

    mod = _kernel_module(kernel)
    mod.stretch_kernel(x, mono, out, out_mono, float(rate), frame_len, corr_len, seek, hop, target)

    result = out[:, :target]
    np.clip(result, -1.0, 1.0, out=result)
    return AudioClip(result, sr, source_format=clip.source_format)


def generate_variant_grid(clip: AudioClip, config: SolaConfig | None = None) -> dict[float, AudioClip]:
    """Render the 98 experiment variants: rates 0.02..0.98 and 1.02..1.98.

    Returns a rate -> clip mapping in ascending rate order. The whole grid of
    a long song is large; callers that only write files should iterate
    grid_rates() and call stretch() per rate instead.
    """
    return {rate: stretch(clip, rate, config) for rate in grid_rates()}


def stretched_tempo(t_o: float, rate: float) -> float:
    """Tempo of the stretched version: t_s = t_o / rate (BPM)."""
    if t_o <= 0:
        raise DomainError(f"tempo must be positive, got {t_o}")
    rate = validate_rate(rate)
    return t_o / rate
