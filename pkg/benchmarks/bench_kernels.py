"""Compare the compiled stretch kernel against the pure-numpy fallback.

Runs the same workload through both kernels and reports wall time and
speedup. The grid workload mirrors the experiment: every grid rate applied
to one clip.

    python benchmarks/bench_kernels.py [--seconds 10] [--repeats 3]
"""

import argparse
import time

import numpy as np

from msrkit.audio import AudioClip
from msrkit.stretch import available_kernels, grid_rates, stretch


def _noise_clip(seconds: float, sr: int = 8000) -> AudioClip:
    rng = np.random.default_rng(7)
    samples = np.clip(0.3 * rng.standard_normal(int(seconds * sr)), -1.0, 1.0)
    return AudioClip(samples=samples, sample_rate_hz=sr)


def _time_grid(clip: AudioClip, kernel: str, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for rate in grid_rates():
            stretch(clip, rate, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best


def _time_single(clip: AudioClip, kernel: str, rate: float, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        stretch(clip, rate, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seconds", type=float, default=10.0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    kernels = available_kernels()
    clip = _noise_clip(args.seconds)
    print(f"clip: {args.seconds:.1f}s at {clip.sample_rate_hz} Hz; kernels: {', '.join(kernels)}")

    results: dict = {}
    for kernel in kernels:
        grid_time = _time_grid(clip, kernel, args.repeats)
        single = _time_single(clip, kernel, 0.5, args.repeats)
        results[kernel] = (grid_time, single)
        print(f"{kernel:>9}: full 98-rate grid {grid_time:7.3f}s   single rate 0.50 {single * 1e3:7.1f}ms")

    if "compiled" in results and "python" in results:
        speedup = results["python"][0] / results["compiled"][0]
        print(f"compiled kernel speedup over python fallback: {speedup:.1f}x")
    else:
        print("compiled kernel not built; showing fallback only")


if __name__ == "__main__":
    main()
