"""Gap structure of the inclusion-exclusion polynomial of a coprime pair.

The polynomial (1 - x^{pq})(1 - x) / ((1 - x^p)(1 - x^q)) has degree
phi = (p-1)(q-1), coefficients in {-1, 0, 1}, and its gapset is the set of
differences between consecutive exponents carrying a nonzero coefficient.
Two independent coefficient builders feed a reading oracle; the closed form
comes straight off the Euclidean chain of (p, <q> mod p).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import ConsistencyError, InputError, LimitError
from .euclid import build_chain
from .limits import oracle_cap
from .residue import lnr
from .semigroup import validate_pair


@dataclass(frozen=True, eq=False)
class CoefficientStream:
    """Dense coefficient array of one polynomial, indexed by degree."""

    p: int
    q: int
    coeffs: np.ndarray

    def __len__(self):
        return len(self.coeffs)


def _checked_stream(p: int, q: int, coeffs: np.ndarray) -> CoefficientStream:
    phi = (p - 1) * (q - 1)
    if len(coeffs) != phi + 1:
        raise ConsistencyError(f"stream length {len(coeffs)} != {phi + 1}")
    if coeffs[0] != 1 or coeffs[phi] != 1:
        raise ConsistencyError("stream must start and end with coefficient 1")
    return CoefficientStream(p=p, q=q, coeffs=coeffs)


def _cap_check(p: int, q: int, max_coeffs) -> None:
    phi = (p - 1) * (q - 1)
    cap = oracle_cap(max_coeffs)
    if phi + 1 > cap:
        raise LimitError(
            f"stream of {phi + 1} coefficients exceeds the cap of {cap};"
            " raise GAPFORGE_MAX_ORACLE_COEFFS or pass max_coeffs"
        )


def coefficients_by_quotient(p: int, q: int, max_coeffs=None) -> CoefficientStream:
    """Coefficients from long division of the defining rational function."""
    validate_pair(p, q)
    _cap_check(p, q, max_coeffs)
    return _checked_stream(p, q, backend.kernels().quotient_series_coeffs(p, q))


def coefficients_by_chi(p: int, q: int, max_coeffs=None) -> CoefficientStream:
    """Coefficients as first differences of semigroup membership."""
    validate_pair(p, q)
    _cap_check(p, q, max_coeffs)
    phi = (p - 1) * (q - 1)
    mask = backend.kernels().semigroup_mask(p, q, phi)
    coeffs = np.diff(mask.astype(np.int8), prepend=np.int8(0))
    return _checked_stream(p, q, coeffs)


def gapset_oracle(stream: CoefficientStream) -> tuple:
    """Gap multiset read straight off a coefficient stream.

    Gaps are the spans between consecutive nonzero coefficients, counted
    with multiplicity. Two structural facts are checked along the way: the
    nonzero coefficients alternate +1, -1, ..., +1, and the run-length
    encoding of the partial sums (dropping the final run) reproduces the
    span multiset.
    """
    coeffs = np.asarray(stream.coeffs)
    support = np.flatnonzero(coeffs)
    if len(support) < 2:
        raise InputError("degenerate coefficient stream: fewer than two terms")
    vals = coeffs[support]
    if (
        vals[0] != 1
        or vals[-1] != 1
        or len(support) % 2 == 0
        or not np.all(vals[0::2] == 1)
        or not np.all(vals[1::2] == -1)
    ):
        raise ConsistencyError("nonzero coefficients do not alternate +1/-1")
    spans = np.diff(support)
    gaps = Counter(int(g) for g in spans)
    chi = np.cumsum(coeffs, dtype=np.int64)
    if chi.min() < 0 or chi.max() > 1:
        raise ConsistencyError("partial sums escape {0, 1}")
    change = np.flatnonzero(np.diff(chi)) + 1
    run_bounds = np.concatenate(([0], change, [len(chi)]))
    run_lengths = np.diff(run_bounds)
    if Counter(int(x) for x in run_lengths[:-1]) != gaps:
        raise ConsistencyError("span reading and run-length reading disagree")
    return set(gaps), gaps


@dataclass(frozen=True)
class GapPartition:
    """Closed-form gapset, partitioned by chain index.

    parts[i - 1] lists r_{i-1} - z * r_i - 1 for z ascending; the last part
    stops one step earlier than the others (its final step would hit 0).
    flat is the union as one ascending tuple and count its size.
    """

    p: int
    q: int
    parts: tuple
    flat: tuple
    count: int


def gapset_formula(p: int, q: int) -> GapPartition:
    """Gapset read off the chain of (p, <q> mod p); no coefficients built."""
    validate_pair(p, q)
    chain = build_chain(p, lnr(q, p))
    parts = []
    for i in range(1, chain.t + 1):
        top = chain.Z[i - 1] - 1 if i < chain.t else chain.Z[i - 1] - 2
        parts.append(tuple(chain.r[i - 1] - z * chain.r[i] - 1 for z in range(top + 1)))
    flat = sorted(g for part in parts for g in part)
    count = sum(chain.Z) - 1
    if len(set(flat)) != len(flat) or len(flat) != count:
        raise ConsistencyError("gap parts overlap")
    return GapPartition(p=p, q=q, parts=tuple(parts), flat=tuple(flat), count=count)


def largest_gaps(p: int, q: int) -> tuple:
    """The two largest gaps (g1, g2).

    Checks them against their direct closed forms: g1 = p - 1 and
    g2 = max(r - 1, p - r - 1) with r = <q> mod p.
    """
    partition = gapset_formula(p, q)
    if len(partition.flat) < 2:
        raise InputError(f"({p}, {q}) has fewer than two gaps")
    g1, g2 = partition.flat[-1], partition.flat[-2]
    r = lnr(q, p)
    if g1 != p - 1 or g2 != max(r - 1, p - r - 1):
        raise ConsistencyError("largest gaps disagree with their closed forms")
    return g1, g2


# Gap-count bounds use the convention F_1 = 1, F_2 = 2, F_k = F_{k-1} + F_{k-2}
# (the classical sequence shifted by one). Index 0 holds the classical value
# under that shift; only fibonacci_inequality_check ever reads it.
_FIB = [1, 1, 2]


def _fib(k: int) -> int:
    while len(_FIB) <= k:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[k]


def gap_bounds(p: int, q: int) -> tuple:
    """Bounds (k, p - 1) on the number of distinct gaps, F_k < p <= F_{k+1}."""
    validate_pair(p, q)
    k = 1
    while not _fib(k) < p <= _fib(k + 1):
        k += 1
    return k, p - 1


def fibonacci_pair(k: int) -> tuple:
    """The extreme pair (F_k, F_{k+1}); its gap count meets the lower bound."""
    if k < 3:
        raise InputError(f"k must be at least 3 so that the smaller generator is >= 3: got {k}")
    return _fib(k), _fib(k + 1)


def fibonacci_inequality_check(n: int, k: int) -> bool:
    """Exact check of n * F_k + F_{k-1} <= F_{k+n} (F_0 taken as 1)."""
    if n < 1 or k < 1:
        raise InputError(f"need n, k >= 1: got ({n}, {k})")
    return n * _fib(k) + _fib(k - 1) <= _fib(k + n)
