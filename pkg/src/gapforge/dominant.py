"""Dominant pairs of the residue permutation n -> <u*n> mod p.

A pair a < b is dominant when both permuted endpoint values lie strictly
below every permuted interior value (low kind) or strictly above every
permuted interior value (high kind). The set of differences b - a over all
dominant pairs has a closed form read off the Euclidean chain of p and the
inverse of u.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import backend
from .errors import ConsistencyError, InputError, LimitError
from .euclid import build_chain, mod_inverse
from .limits import MAX_GENERATOR
from .residue import lnr

LOW = "low"
HIGH = "high"
BOTH = "both"

# The window scan is quadratic in p; past this it needs an explicit force.
BRUTE_FORCE_P_LIMIT = 4096


def _validate_perm(p: int, u: int) -> int:
    """Check the permutation parameters and return u normalized into [1, p)."""
    if not 3 <= p < MAX_GENERATOR:
        raise InputError(f"p must be in [3, 2^31): got {p}")
    un = u % p
    if un == 0 or math.gcd(un, p) != 1:
        raise InputError(f"u must be coprime to p: got u = {u}, p = {p}")
    return un


def is_dominant(p: int, u: int, a: int, b: int):
    """Classify the window [a, b] against the permuted interior values.

    Returns "low", "high", "both" (an empty interior satisfies both kinds)
    or None when the pair is not dominant. Any integer endpoints are fine;
    dominance only depends on residues, and windows wider than p always
    contain a full residue system, so they are never dominant.
    """
    un = _validate_perm(p, u)
    if a >= b:
        raise InputError(f"need a < b: got ({a}, {b})")
    if b - a > p:
        return None
    fa = lnr(un * a, p)
    fb = lnr(un * b, p)
    top = fa if fa > fb else fb
    bot = fa if fa < fb else fb
    low_ok = high_ok = True
    for n in range(a + 1, b):
        v = lnr(un * n, p)
        if v <= top:
            low_ok = False
        if v >= bot:
            high_ok = False
        if not (low_ok or high_ok):
            return None
    if low_ok and high_ok:
        return BOTH
    return LOW if low_ok else HIGH


def involute(p: int, u: int, pair: tuple) -> tuple:
    """Mirror a pair through the permutation: (a, b) -> (-r1 - b, -r1 - a).

    Sends low-dominant pairs to high-dominant ones and back, preserving the
    difference b - a; applying it twice returns the original pair.
    """
    _validate_perm(p, u)
    a, b = pair
    r1 = mod_inverse(u, p)
    return (-r1 - b, -r1 - a)


@dataclass(frozen=True)
class DominantDifferences:
    """Closed-form difference set, partitioned by chain index.

    parts[i - 1] lists r_{i-1} - z * r_i for z = 0, ..., Z_i - 1, so the
    first part holds the largest values and parts walk down disjoint ranges.
    flat is the same data as one ascending tuple.
    """

    p: int
    u: int
    r1: int
    parts: tuple
    flat: tuple


def dominant_differences_formula(p: int, u: int) -> DominantDifferences:
    """Difference set read off the chain of (p, inverse of u); no scanning."""
    un = _validate_perm(p, u)
    chain = build_chain(p, mod_inverse(un, p))
    parts = tuple(
        tuple(chain.r[i - 1] - z * chain.r[i] for z in range(chain.Z[i - 1]))
        for i in range(1, chain.t + 1)
    )
    flat = sorted(x for part in parts for x in part)
    if len(set(flat)) != len(flat) or len(flat) != sum(chain.Z):
        raise ConsistencyError("difference parts overlap")
    return DominantDifferences(p=p, u=un, r1=chain.r1, parts=parts, flat=tuple(flat))


def dominant_differences_bruteforce(p: int, u: int, force: bool = False) -> tuple:
    """Differences from the literal window scan over 0 <= a < b <= p.

    The scan carries a running interior min/max per left endpoint (see the
    kernels); it checks the same strict inequalities as is_dominant but
    touches no chain machinery.
    """
    un = _validate_perm(p, u)
    if p > BRUTE_FORCE_P_LIMIT and not force:
        raise LimitError(
            f"window scan is quadratic; p = {p} exceeds {BRUTE_FORCE_P_LIMIT}"
            " (pass force=True to run anyway)"
        )
    diffs = backend.kernels().dominant_diff_scan(p, un)
    return tuple(sorted({int(d) for d in diffs} | {1, p}))


def enumerate_dominant_pairs(p: int, u: int, force: bool = False) -> list:
    """Every dominant pair (a, b, kind) with 0 <= a < b <= p.

    Same incremental scan as the bulk kernel, but keeping the pairs and
    their kinds; meant for invariant tests, so it stays in pure Python.
    """
    un = _validate_perm(p, u)
    if p > BRUTE_FORCE_P_LIMIT and not force:
        raise LimitError(
            f"pair enumeration is quadratic; p = {p} exceeds {BRUTE_FORCE_P_LIMIT}"
            " (pass force=True to run anyway)"
        )
    perm = [(un * n) % p for n in range(p)]
    perm.append(0)
    out = []
    for a in range(p):
        fa = perm[a]
        out.append((a, a + 1, BOTH))
        imin = imax = perm[a + 1]
        for b in range(a + 2, p + 1):
            fb = perm[b]
            top = fa if fa > fb else fb
            bot = fa if fa < fb else fb
            low_ok = top < imin
            high_ok = bot > imax
            if low_ok and high_ok:
                out.append((a, b, BOTH))
            elif low_ok:
                out.append((a, b, LOW))
            elif high_ok:
                out.append((a, b, HIGH))
            if fb < imin:
                imin = fb
            elif fb > imax:
                imax = fb
    return out
