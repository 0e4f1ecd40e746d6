"""Pure-Python kernels; gapforge._kernels mirrors this interface in C.

Three hot loops live here: the dominant-pair window scan, the semigroup
membership sieve, and long division of the defining rational function.
Everything else in the package is O(log p) and stays in ordinary modules.
"""
from __future__ import annotations

from array import array

import numpy as np

from .errors import ConsistencyError

BACKEND_NAME = "python"


def dominant_diff_scan(p: int, u: int) -> np.ndarray:
    """Distinct differences b - a over dominant pairs with 0 <= a < b <= p.

    For each left endpoint the interior min/max is carried along, so every
    pair costs O(1) on top of the permuted values themselves.
    """
    perm = [(u * n) % p for n in range(p)]
    perm.append(0)
    seen = bytearray(p + 1)
    seen[1] = 1  # consecutive pairs have an empty interior
    for a in range(p):
        fa = perm[a]
        imin = imax = perm[a + 1]
        for b in range(a + 2, p + 1):
            fb = perm[b]
            if (fa if fa > fb else fb) < imin or (fa if fa < fb else fb) > imax:
                seen[b - a] = 1
            if fb < imin:
                imin = fb
            elif fb > imax:
                imax = fb
    return np.flatnonzero(np.frombuffer(bytes(seen), dtype=np.uint8)).astype(np.int64)


def semigroup_mask(p: int, q: int, limit: int) -> np.ndarray:
    """mask[n] = 1 iff n = i*q + j*p with i, j >= 0, for 0 <= n <= limit."""
    mask = bytearray(limit + 1)
    for base in range(0, limit + 1, q):
        for n in range(base, limit + 1, p):
            mask[n] = 1
    return np.frombuffer(bytes(mask), dtype=np.uint8)


def quotient_series_coeffs(p: int, q: int) -> np.ndarray:
    """Coefficients of (1 - x^{pq})(1 - x) / ((1 - x^p)(1 - x^q)).

    Long division in increasing powers. Every emitted coefficient must land
    in {-1, 0, 1} and the remainder past degree (p-1)(q-1) must vanish; both
    are checked and failure raises.
    """
    pq = p * q
    phi = (p - 1) * (q - 1)
    work = array("b", bytes(pq + 2))
    work[0] += 1
    work[1] -= 1
    work[pq] -= 1
    work[pq + 1] += 1
    out = array("b", bytes(phi + 1))
    for m in range(phi + 1):
        c = work[m]
        if c:
            if not -1 <= c <= 1:
                raise ConsistencyError(f"coefficient {c} at degree {m} outside {{-1, 0, 1}}")
            out[m] = c
            work[m + p] += c
            work[m + q] += c
            work[m + p + q] -= c
    if any(work[phi + 1:]):
        raise ConsistencyError("nonzero remainder past the polynomial degree")
    return np.frombuffer(out, dtype=np.int8).copy()
