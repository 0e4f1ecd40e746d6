"""Admissible coefficient tuples and the greedy chain representation.

Every residue n in [0, p) has at least one admissible tuple (z_1, ..., z_t)
with n = z_1 r_1 - z_2 r_2 + z_3 r_3 - ...; admissible means 0 <= z_i <= Z_i,
the lowest nonzero index is odd, and z_t <= Z_t - 1. Representations can
collide (r_3 = r_1 - Z_2 r_2 names one value twice), so the greedy algorithm
serves as the canonical choice; it hits each residue exactly once. For any
admissible tuple, the weighted sum z_1 s_1 + ... + z_t s_t recovers the
permuted residue of its value under multiplication by the inverse of r_1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ConsistencyError, InputError
from .euclid import EuclidChain


def lnr(x: int, p: int) -> int:
    """Least nonnegative residue of x modulo p."""
    if p < 1:
        raise InputError(f"modulus must be positive: got {p}")
    return x % p


@dataclass(frozen=True)
class ZTuple:
    """Admissible coefficient tuple attached to a chain.

    Entry z[k] multiplies r_{k+1}; construction validates admissibility, so
    an instance that exists is valid.
    """

    chain: EuclidChain
    z: tuple[int, ...]

    def __post_init__(self):
        chain, z = self.chain, self.z
        if len(z) != chain.t:
            raise InputError(f"tuple has {len(z)} entries for a chain of length {chain.t}")
        for i, (zi, cap) in enumerate(zip(z, chain.Z), start=1):
            if not 0 <= zi <= cap:
                raise InputError(f"z_{i} = {zi} outside [0, {cap}]")
        if z[-1] == chain.Z[-1]:
            raise InputError(f"z_t must stay below Z_t = {chain.Z[-1]}")
        first = self.iota_bar
        if first is not None and first % 2 == 0:
            raise InputError(f"lowest nonzero index must be odd: got {first}")

    @property
    def iota_bar(self):
        """1-based position of the lowest nonzero entry; None for the zero tuple."""
        for i, zi in enumerate(self.z, start=1):
            if zi:
                return i
        return None


def _represent_list(chain: EuclidChain, n: int) -> list:
    """Greedy zoom core; the caller guarantees 0 <= n < p.

    Kept allocation-light because sweeps call it once per residue.
    """
    r, Z, t = chain.r, chain.Z, chain.t
    z = [0] * t
    target = n
    j = 1
    phases = 0
    while target:
        phases += 1
        if phases > t or j > t:
            raise ConsistencyError(f"zoom failed to settle for n = {n}")
        acc = 0
        while acc + Z[j - 1] * r[j] < target:
            acc += Z[j - 1] * r[j]
            z[j - 1] = Z[j - 1]
            j += 2
            if j > t:
                raise ConsistencyError(f"zoom ran off the chain for n = {n}")
        need = target - acc
        zj = -(-need // r[j])
        z[j - 1] = zj
        target = acc + zj * r[j] - target
        j += 1
    return z


def represent(chain: EuclidChain, n: int) -> ZTuple:
    """The admissible tuple whose alternating value is n.

    Greedy zoom: overshoot the target with odd-index terms, then correct the
    excess with even-index terms, alternating until the excess is zero. Each
    phase takes full quotient steps while they still fall short and one
    minimal partial step; the excess shrinks every phase, so at most t
    phases run (checked, as is the strict increase of the step index).
    """
    if not 0 <= n < chain.p:
        raise InputError(f"n must lie in [0, {chain.p}): got {n}")
    return ZTuple(chain, tuple(_represent_list(chain, n)))


def r_value(zt: ZTuple) -> int:
    """Alternating sum z_1 r_1 - z_2 r_2 + z_3 r_3 - ...; always in [0, p)."""
    r = zt.chain.r
    total = 0
    for i, zi in enumerate(zt.z, start=1):
        total += zi * r[i] if i % 2 else -zi * r[i]
    if not 0 <= total < zt.chain.p:
        raise ConsistencyError(f"tuple value {total} escaped [0, {zt.chain.p})")
    return total


def permuted_value(zt: ZTuple) -> int:
    """Weighted sum z_1 s_1 + ... + z_t s_t.

    Equals the permuted residue of the tuple's value under multiplication by
    the inverse of r_1 modulo p, and never reaches p.
    """
    s = zt.chain.s
    total = sum(zi * s[i] for i, zi in enumerate(zt.z, start=1))
    if not 0 <= total < zt.chain.p:
        raise ConsistencyError(f"weighted value {total} escaped [0, {zt.chain.p})")
    return total


def iter_admissible(chain: EuclidChain):
    """Yield every admissible tuple of the chain (test-sized chains only)."""
    ranges = [range(cap + 1) for cap in chain.Z]
    ranges[-1] = range(chain.Z[-1])
    for combo in itertools.product(*ranges):
        first = next((i for i, v in enumerate(combo, start=1) if v), None)
        if first is None or first % 2 == 1:
            yield ZTuple(chain, combo)


def all_representations(chain: EuclidChain, n: int) -> list:
    """Admissible tuples with value n, by exhaustive search (small chains)."""
    return [zt for zt in iter_admissible(chain) if r_value(zt) == n]
