"""Euclidean remainder chains and their multiplier sequences.

The chain for (p, r1) is the remainder sequence r_0 = p, r_1,
r_{i+1} = r_{i-1} - Z_i * r_i with quotients Z_i = floor(r_{i-1} / r_i),
run down to r_t = 1, r_{t+1} = 0 (coprimality makes 1 the last nonzero
remainder). The companion sequence s_0 = 0, s_1 = 1,
s_{i+1} = Z_i * s_i + s_{i-1} tracks how many times p has been folded in:
p = s_i * r_{i-1} + s_{i-1} * r_i holds along the whole chain and
s_{t+1} = p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError, InputError
from .limits import MAX_GENERATOR


@dataclass(frozen=True)
class EuclidChain:
    """Remainders, quotients and multipliers of one Euclidean run.

    r and s are 0-based with natural indices (r[0] = p, s[0] = 0). The
    quotients are 1-based in all formulas, so Z_i lives at Z[i - 1];
    quotient(i) hides the shift.
    """

    p: int
    r1: int
    t: int
    r: tuple[int, ...]
    Z: tuple[int, ...]
    s: tuple[int, ...]

    def quotient(self, i: int) -> int:
        """Z_i for 1 <= i <= t."""
        if not 1 <= i <= self.t:
            raise InputError(f"quotient index must be in [1, {self.t}]: got {i}")
        return self.Z[i - 1]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r1": self.r1,
            "t": self.t,
            "r": list(self.r),
            "Z": list(self.Z),
            "s": list(self.s),
        }


def build_chain(p: int, r1: int) -> EuclidChain:
    """Run the Euclidean algorithm for (p, r1) and record every sequence."""
    if not 3 <= p < MAX_GENERATOR:
        raise InputError(f"p must be in [3, 2^31): got {p}")
    if not 1 <= r1 < p:
        raise InputError(f"r1 must be in [1, p): got {r1}")
    if math.gcd(p, r1) != 1:
        raise InputError(f"p and r1 must be coprime: gcd({p}, {r1}) != 1")

    r = [p, r1]
    Z = []
    while r[-1] > 1:
        quo, rem = divmod(r[-2], r[-1])
        Z.append(quo)
        r.append(rem)
    # r_t = 1 reached; close with Z_t = r_{t-1} and r_{t+1} = 0.
    Z.append(r[-2])
    r.append(0)
    t = len(r) - 2

    s = [0, 1]
    for i in range(1, t + 1):
        s.append(Z[i - 1] * s[i] + s[i - 1])
    if s[t + 1] != p:
        raise ConsistencyError(f"multiplier sequence ends at {s[t + 1]}, not {p}")

    return EuclidChain(p=p, r1=r1, t=t, r=tuple(r), Z=tuple(Z), s=tuple(s))


def mod_inverse(x: int, p: int) -> int:
    """Multiplicative inverse of x modulo p, normalized into [1, p)."""
    if p < 2:
        raise InputError(f"modulus must be at least 2: got {p}")
    try:
        return pow(x, -1, p)
    except ValueError:
        raise InputError(f"{x} is not invertible modulo {p}") from None


def alternating_tail_sum(chain: EuclidChain, i: int) -> int:
    """Sum of Z_j * r_j over j = i, i + 2, ... up to t.

    The remainder recurrence telescopes this to r_{i-1} - 1 when t - i is
    odd and to r_{i-1} when t - i is even; the greedy representation of
    residues leans on exactly this reach.
    """
    if not 1 <= i <= chain.t:
        raise InputError(f"index must be in [1, {chain.t}]: got {i}")
    return sum(chain.Z[j - 1] * chain.r[j] for j in range(i, chain.t + 1, 2))
