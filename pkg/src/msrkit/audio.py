"""PCM audio container and RIFF WAV I/O.

Supports 16-bit integer and 32-bit float WAV, mono or stereo. Samples are held
in memory as float64 arrays shaped (channels, n) with amplitudes in [-1, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.io import wavfile

from msrkit.exceptions import AudioInputError

PCM16 = "pcm16"
FLOAT32 = "float32"


@dataclass(frozen=True)
class AudioClip:
    """Immutable audio buffer plus its sample rate.

    samples: float64 array (channels, n); a 1-D array is accepted and treated
    as mono. source_format records the WAV encoding the clip came from so
    writers can round-trip it.
    """

    samples: np.ndarray
    sample_rate_hz: int
    source_format: str = PCM16

    def __post_init__(self):
        data = np.asarray(self.samples, dtype=np.float64)
        if data.ndim == 1:
            data = data[np.newaxis, :]
        if data.ndim != 2 or data.shape[0] not in (1, 2):
            raise AudioInputError(
                f"samples must be (channels, n) with 1 or 2 channels, got shape {np.shape(self.samples)}"
            )
        if int(self.sample_rate_hz) <= 0:
            raise AudioInputError(f"sample_rate_hz must be positive, got {self.sample_rate_hz}")
        if data.size and (np.max(data) > 1.0 + 1e-9 or np.min(data) < -1.0 - 1e-9):
            raise AudioInputError("sample amplitudes must lie in [-1.0, 1.0]")
        if self.source_format not in (PCM16, FLOAT32):
            raise AudioInputError(f"unsupported sample format {self.source_format!r}")
        object.__setattr__(self, "samples", np.ascontiguousarray(data))
        object.__setattr__(self, "sample_rate_hz", int(self.sample_rate_hz))

    @property
    def channels(self) -> int:
        return self.samples.shape[0]

    @property
    def n_samples(self) -> int:
        """Samples per channel."""
        return self.samples.shape[1]

    @property
    def duration_seconds(self) -> float:
        return self.n_samples / self.sample_rate_hz

    def mono(self) -> np.ndarray:
        """Channel average, used wherever a single correlation signal is needed."""
        if self.channels == 1:
            return self.samples[0]
        return (self.samples[0] + self.samples[1]) * 0.5


def read_wav(path: str | Path) -> AudioClip:
    """Load a PCM16 or float32 RIFF WAV file.

    Float samples outside [-1, 1] are clipped on read.
    """
    rate, data = wavfile.read(str(path))
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / 32768.0
        fmt = PCM16
    elif data.dtype == np.float32:
        samples = np.clip(data.astype(np.float64), -1.0, 1.0)
        fmt = FLOAT32
    else:
        raise AudioInputError(f"unsupported WAV sample type {data.dtype} in {path}")
    if samples.ndim == 1:
        samples = samples[np.newaxis, :]
    else:
        samples = samples.T
    if samples.shape[0] not in (1, 2):
        raise AudioInputError(f"expected mono or stereo, got {samples.shape[0]} channels in {path}")
    return AudioClip(samples, int(rate), source_format=fmt)


def write_wav(path: str | Path, clip: AudioClip, sample_format: str | None = None) -> None:
    """Write a clip as PCM16 (default: the clip's source format)."""
    fmt = sample_format or clip.source_format
    data = np.clip(clip.samples, -1.0, 1.0).T
    if clip.channels == 1:
        data = data[:, 0]
    if fmt == PCM16:
        # symmetric with the /32768 read scale; +1.0 clamps to int16 max
        encoded = np.clip(np.rint(data * 32768.0), -32768, 32767).astype(np.int16)
    elif fmt == FLOAT32:
        encoded = data.astype(np.float32)
    else:
        raise AudioInputError(f"unsupported sample format {fmt!r}")
    wavfile.write(str(path), clip.sample_rate_hz, encoded)
