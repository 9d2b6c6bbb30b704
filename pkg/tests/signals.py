"""Deterministic signal builders shared by the test modules."""

import numpy as np

from msrkit.audio import AudioClip

SR = 8000


def sine_clip(freq=440.0, seconds=2.0, sr=SR, amplitude=0.5, stereo=False):
    t = np.arange(int(round(seconds * sr))) / sr
    x = amplitude * np.sin(2.0 * np.pi * freq * t)
    if stereo:
        x = np.stack([x, 0.5 * x])
    return AudioClip(samples=x, sample_rate_hz=sr)


def click_track(bpm, seconds=12.0, sr=SR):
    """Exponentially decaying 1.5 kHz bursts on every beat."""
    n = int(round(seconds * sr))
    x = np.zeros(n)
    period = 60.0 / bpm
    t = 0.0
    while t < seconds:
        i = int(round(t * sr))
        burst = min(n - i, int(0.008 * sr))
        if burst > 0:
            env = np.exp(-np.arange(burst) / (0.002 * sr))
            x[i:i + burst] += env * np.sin(2.0 * np.pi * 1500.0 * np.arange(burst) / sr)
        t += period
    return AudioClip(samples=np.clip(x, -1.0, 1.0), sample_rate_hz=sr)


def noise_clip(seconds=2.0, sr=SR, seed=0, amplitude=0.3):
    rng = np.random.default_rng(seed)
    x = amplitude * rng.standard_normal(int(round(seconds * sr)))
    return AudioClip(samples=np.clip(x, -1.0, 1.0), sample_rate_hz=sr)


def dominant_frequency(clip, skip_fraction=0.2):
    """Strongest FFT bin of the interior of the mono signal, in Hz."""
    mono = clip.mono()
    skip = int(mono.size * skip_fraction)
    segment = mono[skip:mono.size - skip]
    window = np.hanning(segment.size)
    spectrum = np.abs(np.fft.rfft(segment * window))
    spectrum[0] = 0.0
    return float(np.argmax(spectrum) * clip.sample_rate_hz / segment.size)
