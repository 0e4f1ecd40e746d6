import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapforge import InputError, alternating_tail_sum, build_chain, mod_inverse

KNOWN_CHAINS = {
    (5, 2): ((5, 2, 1, 0), (2, 2), (0, 1, 2, 5)),
    (5, 3): ((5, 3, 2, 1, 0), (1, 1, 2), (0, 1, 1, 2, 5)),
    (3, 1): ((3, 1, 0), (3,), (0, 1, 3)),
    (3, 2): ((3, 2, 1, 0), (1, 2), (0, 1, 1, 3)),
    (8, 5): ((8, 5, 3, 2, 1, 0), (1, 1, 1, 2), (0, 1, 1, 2, 3, 8)),
}


def schoolbook_chain(p, r1):
    """Plain remainder trace; independent of the package's builder."""
    r = [p, r1]
    while r[-1] != 0:
        r.append(r[-2] % r[-1])
    Z = [r[i - 1] // r[i] for i in range(1, len(r) - 1)]
    return r, Z


@st.composite
def chain_seeds(draw, p_max=10**6):
    p = draw(st.integers(min_value=3, max_value=p_max))
    r1 = draw(st.integers(min_value=1, max_value=p - 1))
    if math.gcd(p, r1) != 1:
        r1 = next(v for v in range(r1, p) if math.gcd(v, p) == 1)
    return p, r1


def test_known_chains():
    for (p, r1), (r, Z, s) in KNOWN_CHAINS.items():
        chain = build_chain(p, r1)
        assert chain.r == r
        assert chain.Z == Z
        assert chain.s == s
        assert chain.t == len(Z)


def test_matches_schoolbook_trace():
    for p in range(3, 120):
        for r1 in range(1, p):
            if math.gcd(p, r1) != 1:
                continue
            chain = build_chain(p, r1)
            r, Z = schoolbook_chain(p, r1)
            assert list(chain.r) == r
            assert list(chain.Z) == Z


@settings(max_examples=200)
@given(chain_seeds())
def test_chain_identities(seed):
    p, r1 = seed
    chain = build_chain(p, r1)
    t, r, Z, s = chain.t, chain.r, chain.Z, chain.s
    assert r[0] == p and r[t] == 1 and r[t + 1] == 0
    assert all(r[i] > r[i + 1] for i in range(t + 1))
    assert s[0] == 0 and s[1] == 1 and s[t + 1] == p
    # p folds through every stage of the chain
    for i in range(1, t + 2):
        assert s[i] * r[i - 1] + s[i - 1] * r[i] == p
    # quotient weights telescope to p - 1 + s_t
    assert sum(Z[i - 1] * s[i] for i in range(1, t + 1)) == p - 1 + s[t]


@settings(max_examples=200)
@given(chain_seeds())
def test_tail_sum_case_split(seed):
    p, r1 = seed
    chain = build_chain(p, r1)
    for i in range(1, chain.t + 1):
        direct = sum(chain.Z[j - 1] * chain.r[j] for j in range(i, chain.t + 1, 2))
        got = alternating_tail_sum(chain, i)
        assert got == direct
        want = chain.r[i - 1] - 1 if (chain.t - i) % 2 else chain.r[i - 1]
        assert got == want


def test_tail_sum_known_values():
    chain = build_chain(5, 2)
    assert alternating_tail_sum(chain, 1) == 4
    assert alternating_tail_sum(chain, 2) == 2
    with pytest.raises(InputError):
        alternating_tail_sum(chain, 0)
    with pytest.raises(InputError):
        alternating_tail_sum(chain, 3)


def test_quotient_accessor():
    chain = build_chain(5, 3)
    assert [chain.quotient(i) for i in (1, 2, 3)] == [1, 1, 2]
    with pytest.raises(InputError):
        chain.quotient(0)
    with pytest.raises(InputError):
        chain.quotient(4)


def test_to_dict_round_trip():
    chain = build_chain(8, 5)
    d = chain.to_dict()
    assert d == {"p": 8, "r1": 5, "t": 4, "r": [8, 5, 3, 2, 1, 0], "Z": [1, 1, 1, 2], "s": [0, 1, 1, 2, 3, 8]}


def test_build_chain_rejects_bad_input():
    for p, r1 in [(2, 1), (5, 0), (5, 5), (6, 3), (-5, 2), (2**31, 3)]:
        with pytest.raises(InputError):
            build_chain(p, r1)


def test_mod_inverse():
    for p in range(3, 60):
        for x in range(1, p):
            if math.gcd(x, p) != 1:
                with pytest.raises(InputError):
                    mod_inverse(x, p)
            else:
                inv = mod_inverse(x, p)
                assert 1 <= inv < p
                assert x * inv % p == 1
    assert mod_inverse(-3, 7) == mod_inverse(4, 7)
    with pytest.raises(InputError):
        mod_inverse(3, 1)
