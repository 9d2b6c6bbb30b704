"""Pure-numpy overlap-add synthesis loop.

Reference implementation of the kernel contract; the compiled extension in
_kernel.pyx runs the same algorithm. Candidate offsets are scored by
normalized cross-correlation (dot / sqrt of the two windows' zero-lag
energies); ties prefer the smallest absolute offset, then the smaller offset.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def stretch_kernel(x: np.ndarray, mono: np.ndarray, out: np.ndarray, out_mono: np.ndarray,
                   rate: float, frame_len: int, corr_len: int, seek: int, hop: int,
                   target: int) -> None:
    """Fill out/out_mono with the stretched signal; out[:, :target] is the result.

    x: (channels, n) input, mono: its channel average. out buffers must be
    zeroed and at least target + frame_len + seek + 2 long.
    """
    n = x.shape[1]
    max_a = n - frame_len

    out[:, :frame_len] = x[:, :frame_len]
    out_mono[:frame_len] = mono[:frame_len]

    q_prev = 0
    e_prev = frame_len
    i = 1
    while e_prev < target:
        p_nom = int(math.floor(i * rate * hop + 0.5))
        a = min(i * hop, max_a)

        k_lo = max(-seek, q_prev + 1 - p_nom)
        k_hi = min(seek, e_prev - corr_len - p_nom)
        if k_hi < k_lo:
            k_hi = k_lo
        ell = min(corr_len, e_prev - (p_nom + k_hi))

        if k_hi > k_lo and ell > 0:
            head = mono[a:a + ell]
            window = out_mono[p_nom + k_lo:p_nom + k_hi + ell]
            views = sliding_window_view(window, ell)
            dots = views @ head
            energies = np.einsum("ij,ij->i", views, views)
            denom2 = energies * float(head @ head)
            corr = np.divide(dots, np.sqrt(denom2), out=np.zeros_like(dots),
                             where=denom2 > 0.0)
            ks = np.arange(k_lo, k_hi + 1)
            best = np.lexsort((ks, np.abs(ks), -corr))[0]
            k = int(ks[best])
        else:
            k = k_lo

        q = p_nom + k
        o = e_prev - q
        gain = np.arange(1.0, o + 1.0) / (o + 1.0)
        out[:, q:q + o] = out[:, q:q + o] * (1.0 - gain) + x[:, a:a + o] * gain
        out[:, q + o:q + frame_len] = x[:, a + o:a + frame_len]
        out_mono[q:q + o] = out_mono[q:q + o] * (1.0 - gain) + mono[a:a + o] * gain
        out_mono[q + o:q + frame_len] = mono[a + o:a + frame_len]

        q_prev = q
        e_prev = q + frame_len
        i += 1
