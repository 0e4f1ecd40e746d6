"""Two-generator numerical semigroups: membership, tables, distance sets.

For coprime 3 <= p < q, every integer n has a unique decomposition
n = x*q + y*p + delta*p*q with 0 <= x < p and 0 <= y < q; n is representable
(a nonnegative combination of p and q) exactly when delta >= 0. The
representables and nonrepresentables in [0, phi] with phi = (p-1)(q-1) form
the two tables whose successive-difference sets have closed forms via the
chain of (p, <q> mod p).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .dominant import dominant_differences_formula
from .errors import ConsistencyError, InputError, LimitError
from .euclid import mod_inverse
from .limits import MAX_GENERATOR, oracle_cap
from .residue import lnr


def validate_pair(p: int, q: int):
    """Check 3 <= p < q < 2^31 and gcd(p, q) = 1."""
    if not 3 <= p < q:
        raise InputError(f"need 3 <= p < q: got ({p}, {q})")
    if q >= MAX_GENERATOR:
        raise InputError(f"q must stay below 2^31: got {q}")
    if math.gcd(p, q) != 1:
        raise InputError(f"generators must be coprime: gcd({p}, {q}) != 1")


def ordered_pair(a: int, b: int) -> tuple:
    """Sort two generators into (p, q) with p < q; rejects invalid pairs."""
    p, q = (a, b) if a < b else (b, a)
    validate_pair(p, q)
    return p, q


def frobenius(p: int, q: int) -> int:
    """Largest integer with no nonnegative representation: pq - p - q."""
    validate_pair(p, q)
    return p * q - p - q


def crt_triple(p: int, q: int, n: int) -> tuple:
    """Unique (x, y, delta) with n = x*q + y*p + delta*p*q, 0<=x<p, 0<=y<q."""
    validate_pair(p, q)
    if n < 0:
        raise InputError(f"n must be nonnegative: got {n}")
    x = n * mod_inverse(q, p) % p
    y = n * mod_inverse(p, q) % q
    delta, rem = divmod(n - x * q - y * p, p * q)
    if rem:
        raise ConsistencyError(f"decomposition of {n} left remainder {rem}")
    return x, y, delta


def is_representable(p: int, q: int, n: int) -> bool:
    """Membership of n in the semigroup generated by p and q.

    Computes both characterizations (sign of the excess multiple delta, and
    the floor comparison against the permuted residue) and insists they
    agree.
    """
    validate_pair(p, q)
    if n < 0:
        return False
    _, _, delta = crt_triple(p, q, n)
    by_delta = delta >= 0
    by_floor = lnr(n * mod_inverse(q, p), p) <= n // q
    if by_delta != by_floor:
        raise ConsistencyError(f"membership characterizations disagree at n = {n}")
    return by_delta


@dataclass(frozen=True, eq=False)
class SemigroupTables:
    """Representables (ell) and nonrepresentables (nn) in [0, phi]."""

    p: int
    q: int
    phi: int
    theta: int
    frobenius: int
    ell: np.ndarray
    nn: np.ndarray


def build_tables(p: int, q: int, max_coeffs=None) -> SemigroupTables:
    """Sieve the window [0, phi] into the two tables.

    The sieve marks i*q + j*p literally (see the kernels); table sizes and
    endpoints are checked against their closed forms before returning.
    """
    validate_pair(p, q)
    phi = (p - 1) * (q - 1)
    cap = oracle_cap(max_coeffs)
    if phi + 1 > cap:
        raise LimitError(
            f"table of {phi + 1} cells exceeds the cap of {cap};"
            " raise GAPFORGE_MAX_ORACLE_COEFFS or pass max_coeffs"
        )
    mask = backend.kernels().semigroup_mask(p, q, phi)
    ell = np.flatnonzero(mask).astype(np.int64)
    nn = np.flatnonzero(mask == 0).astype(np.int64)
    theta = phi // 2
    frob = p * q - p - q
    if len(ell) != theta + 1 or len(nn) != theta:
        raise ConsistencyError(
            f"table sizes ({len(ell)}, {len(nn)}) differ from ({theta + 1}, {theta})"
        )
    if ell[0] != 0 or ell[-1] != phi or nn[0] != 1 or nn[-1] != frob:
        raise ConsistencyError("table endpoints differ from their closed forms")
    return SemigroupTables(p=p, q=q, phi=phi, theta=theta, frobenius=frob, ell=ell, nn=nn)


def s_delta_bruteforce(tables: SemigroupTables) -> set:
    """Distinct successive differences of the representable table."""
    return {int(d) for d in np.unique(np.diff(tables.ell))}


def n_delta_bruteforce(tables: SemigroupTables) -> set:
    """Distinct successive differences of the nonrepresentable table."""
    return {int(d) for d in np.unique(np.diff(tables.nn))}


def s_delta_formula(p: int, q: int) -> set:
    """Closed form for the representable distance set.

    Distances between consecutive representables coincide with the dominant
    differences of the permutation by the inverse of q modulo p.
    """
    validate_pair(p, q)
    return set(dominant_differences_formula(p, mod_inverse(q, p)).flat)


def n_delta_formula(p: int, q: int) -> set:
    """Closed form for the nonrepresentable distance set.

    Same set as the representable one, except that q = p + 1 loses the
    distance 2.
    """
    out = s_delta_formula(p, q)
    if q == p + 1:
        out.discard(2)
    return out
