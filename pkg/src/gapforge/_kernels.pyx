# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; gapforge._pykernels documents the shared interface."""
import numpy as np

from .errors import ConsistencyError

BACKEND_NAME = "c"


def dominant_diff_scan(long long p, long long u):
    """Distinct differences b - a over dominant pairs with 0 <= a < b <= p."""
    perm = np.empty(p + 1, dtype=np.int64)
    seen = np.zeros(p + 1, dtype=np.uint8)
    cdef long long[::1] pv = perm
    cdef unsigned char[::1] sv = seen
    cdef long long n, a, b, fa, fb, imin, imax, top, bot, acc, um

    um = u % p
    if um < 0:
        um += p
    acc = 0
    for n in range(p):
        pv[n] = acc
        acc += um
        if acc >= p:
            acc -= p
    pv[p] = 0

    sv[1] = 1  # consecutive pairs have an empty interior
    for a in range(p):
        fa = pv[a]
        imin = pv[a + 1]
        imax = imin
        for b in range(a + 2, p + 1):
            fb = pv[b]
            top = fa if fa > fb else fb
            bot = fa if fa < fb else fb
            if top < imin or bot > imax:
                sv[b - a] = 1
            if fb < imin:
                imin = fb
            elif fb > imax:
                imax = fb
    return np.flatnonzero(seen).astype(np.int64)


def semigroup_mask(long long p, long long q, long long limit):
    """mask[n] = 1 iff n = i*q + j*p with i, j >= 0, for 0 <= n <= limit."""
    mask = np.zeros(limit + 1, dtype=np.uint8)
    cdef unsigned char[::1] mv = mask
    cdef long long base, n
    for base in range(0, limit + 1, q):
        for n in range(base, limit + 1, p):
            mv[n] = 1
    return mask


def quotient_series_coeffs(long long p, long long q):
    """Coefficients of (1 - x^{pq})(1 - x) / ((1 - x^p)(1 - x^q)).

    Long division in increasing powers, with the same loud checks as the
    pure version: coefficients must stay in {-1, 0, 1} and the remainder
    past degree (p-1)(q-1) must vanish.
    """
    cdef long long pq = p * q
    cdef long long phi = (p - 1) * (q - 1)
    work = np.zeros(pq + 2, dtype=np.int8)
    out = np.zeros(phi + 1, dtype=np.int8)
    cdef signed char[::1] wv = work
    cdef signed char[::1] ov = out
    cdef long long m, bad
    cdef signed char c

    wv[0] += 1
    wv[1] -= 1
    wv[pq] -= 1
    wv[pq + 1] += 1
    bad = -1
    for m in range(phi + 1):
        c = wv[m]
        if c != 0:
            if c < -1 or c > 1:
                bad = m
                break
            ov[m] = c
            wv[m + p] += c
            wv[m + q] += c
            wv[m + p + q] -= c
    if bad >= 0:
        raise ConsistencyError(f"coefficient {work[bad]} at degree {bad} outside {{-1, 0, 1}}")
    if np.any(work[phi + 1:]):
        raise ConsistencyError("nonzero remainder past the polynomial degree")
    return out
