import random

import pytest

from gapforge import (
    BOTH,
    HIGH,
    LOW,
    InputError,
    LimitError,
    build_chain,
    dominant_differences_bruteforce,
    dominant_differences_formula,
    enumerate_dominant_pairs,
    involute,
    is_dominant,
    lnr,
    mod_inverse,
)

from conftest import coprime_units

_OPPOSITE = {LOW: HIGH, HIGH: LOW, BOTH: BOTH}


def test_is_dominant_examples():
    # u = 3 on p = 5: permuted residues 0,3,1,4,2
    assert is_dominant(5, 3, 0, 1) == BOTH
    assert is_dominant(5, 3, 0, 5) == LOW
    assert is_dominant(5, 3, 1, 3) == HIGH
    assert is_dominant(5, 3, 0, 2) == LOW
    assert is_dominant(5, 3, 0, 3) is None
    assert is_dominant(5, 3, 0, 7) is None  # spread wider than p
    with pytest.raises(InputError):
        is_dominant(5, 3, 3, 3)
    with pytest.raises(InputError):
        is_dominant(6, 3, 0, 1)  # unit not coprime


def test_enumeration_agrees_with_classifier():
    for p in range(3, 26):
        for u in coprime_units(p):
            found = {(a, b): kind for a, b, kind in enumerate_dominant_pairs(p, u)}
            for a in range(0, p + 1):
                for b in range(a + 1, p + 1):
                    kind = is_dominant(p, u, a, b)
                    assert found.get((a, b)) == kind


def test_formula_matches_bruteforce():
    for p in range(3, 81):
        for u in coprime_units(p):
            formula = dominant_differences_formula(p, u)
            brute = dominant_differences_bruteforce(p, u)
            assert set(formula.flat) == set(brute)


def test_formula_matches_bruteforce_any_backend(any_backend):
    for p in range(3, 30):
        for u in coprime_units(p):
            formula = dominant_differences_formula(p, u)
            brute = dominant_differences_bruteforce(p, u)
            assert set(formula.flat) == set(brute)


def test_parts_structure():
    for p in (7, 24, 61):
        for u in coprime_units(p):
            res = dominant_differences_formula(p, u)
            chain = build_chain(p, res.r1)
            assert res.parts[0][0] == p
            assert res.flat == tuple(sorted(res.flat))
            assert 1 in res.flat
            assert p in res.flat
            assert len(res.flat) == sum(chain.Z)
            assert len(res.parts) == chain.t
            for i, part in enumerate(res.parts, start=1):
                assert len(part) == chain.Z[i - 1]
                for z, d in enumerate(part):
                    assert d == chain.r[i - 1] - z * chain.r[i]


def _check_involution(p, u):
    pairs = enumerate_dominant_pairs(p, u)
    r1 = mod_inverse(u, p)
    for a, b, kind in pairs:
        ia, ib = involute(p, u, (a, b))
        assert ia < ib
        assert ib - ia == b - a
        assert (ia, ib) == (-r1 - b, -r1 - a)
        # applying the map twice returns the original pair
        assert involute(p, u, (ia, ib)) == (a, b)
        # the image classifies as the opposite kind once shifted into range
        base = lnr(ia, p)
        if base + (ib - ia) <= p:
            assert is_dominant(p, u, base, base + (ib - ia)) == _OPPOSITE[kind]


def test_involution_small():
    for p in range(3, 41):
        for u in coprime_units(p):
            _check_involution(p, u)


def test_involution_sampled():
    rng = random.Random(20260817)
    for p in range(61, 101):
        units = coprime_units(p)
        for u in rng.sample(units, min(8, len(units))):
            _check_involution(p, u)


def test_translation_invariance():
    rng = random.Random(99)
    for p in (17, 40, 73):
        for u in rng.sample(coprime_units(p), 6):
            for a, b, kind in enumerate_dominant_pairs(p, u):
                assert is_dominant(p, u, a + p, b + p) == kind
                assert is_dominant(p, u, a - p, b - p) == kind


def test_bruteforce_size_guard():
    with pytest.raises(LimitError):
        dominant_differences_bruteforce(4099, 2)
    with pytest.raises(LimitError):
        enumerate_dominant_pairs(4099, 2)
    # force bypasses the guard
    res = dominant_differences_bruteforce(4099, 2, force=True)
    assert set(res) == set(dominant_differences_formula(4099, 2).flat)


def test_input_validation():
    with pytest.raises(InputError):
        dominant_differences_formula(2, 1)
    with pytest.raises(InputError):
        dominant_differences_formula(10, 5)
    with pytest.raises(InputError):
        dominant_differences_bruteforce(10, 4)
