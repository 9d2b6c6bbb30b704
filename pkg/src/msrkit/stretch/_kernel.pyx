# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled overlap-add synthesis loop.

Same algorithm and tie-breaking as _kernel_py; see that module for the
readable reference.
"""

from libc.math cimport floor, sqrt


def stretch_kernel(double[:, ::1] x, double[::1] mono,
                   double[:, ::1] out, double[::1] out_mono,
                   double rate, Py_ssize_t frame_len, Py_ssize_t corr_len,
                   Py_ssize_t seek, Py_ssize_t hop, Py_ssize_t target):
    cdef Py_ssize_t n = x.shape[1]
    cdef Py_ssize_t channels = x.shape[0]
    cdef Py_ssize_t max_a = n - frame_len
    cdef Py_ssize_t q_prev, e_prev, i, a, p_nom, k_lo, k_hi, ell
    cdef Py_ssize_t k, q, o, j, c, best_k, best_abs, ak
    cdef double e_head, e_out, dot, denom2, corr, best_corr, g, v

    with nogil:
        for j in range(frame_len):
            out_mono[j] = mono[j]
            for c in range(channels):
                out[c, j] = x[c, j]

        q_prev = 0
        e_prev = frame_len
        i = 1
        while e_prev < target:
            p_nom = <Py_ssize_t>floor(i * rate * hop + 0.5)
            a = i * hop
            if a > max_a:
                a = max_a

            k_lo = q_prev + 1 - p_nom
            if k_lo < -seek:
                k_lo = -seek
            k_hi = e_prev - corr_len - p_nom
            if k_hi > seek:
                k_hi = seek
            if k_hi < k_lo:
                k_hi = k_lo
            ell = e_prev - (p_nom + k_hi)
            if ell > corr_len:
                ell = corr_len

            best_k = k_lo
            if k_hi > k_lo and ell > 0:
                e_head = 0.0
                for j in range(ell):
                    e_head += mono[a + j] * mono[a + j]
                best_corr = -2.0
                best_abs = 0
                for k in range(k_lo, k_hi + 1):
                    q = p_nom + k
                    dot = 0.0
                    e_out = 0.0
                    for j in range(ell):
                        v = out_mono[q + j]
                        dot += v * mono[a + j]
                        e_out += v * v
                    denom2 = e_out * e_head
                    if denom2 > 0.0:
                        corr = dot / sqrt(denom2)
                    else:
                        corr = 0.0
                    ak = k if k >= 0 else -k
                    if corr > best_corr or (corr == best_corr and ak < best_abs):
                        best_corr = corr
                        best_k = k
                        best_abs = ak

            q = p_nom + best_k
            o = e_prev - q
            for j in range(o):
                g = (j + 1.0) / (o + 1.0)
                out_mono[q + j] = out_mono[q + j] * (1.0 - g) + mono[a + j] * g
                for c in range(channels):
                    out[c, q + j] = out[c, q + j] * (1.0 - g) + x[c, a + j] * g
            for j in range(o, frame_len):
                out_mono[q + j] = mono[a + j]
                for c in range(channels):
                    out[c, q + j] = x[c, a + j]

            q_prev = q
            e_prev = q + frame_len
            i += 1
