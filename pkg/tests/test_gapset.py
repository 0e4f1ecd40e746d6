import numpy as np
import pytest

from gapforge import (
    ConsistencyError,
    InputError,
    LimitError,
    bench,
    build_chain,
    coefficients_by_chi,
    coefficients_by_quotient,
    fibonacci_inequality_check,
    fibonacci_pair,
    gap_bounds,
    gapset_formula,
    gapset_oracle,
    largest_gaps,
    lnr,
)

from conftest import coprime_pairs


def test_coefficients_small():
    want = [1, -1, 0, 1, 0, -1, 1]
    for builder in (coefficients_by_quotient, coefficients_by_chi):
        stream = builder(3, 4)
        assert stream.coeffs.tolist() == want
        assert len(stream) == 7
        assert stream.p == 3 and stream.q == 4


def test_coefficient_builders_agree():
    for p, q in coprime_pairs(40):
        a = coefficients_by_quotient(p, q).coeffs
        b = coefficients_by_chi(p, q).coeffs
        assert np.array_equal(a, b)
        assert set(np.unique(a)) <= {-1, 0, 1}
        # palindromic: a_m = a_{phi - m}
        assert np.array_equal(a, a[::-1])
        assert a[0] == 1 and a[-1] == 1


def test_coefficient_cap():
    with pytest.raises(LimitError):
        coefficients_by_quotient(4001, 4003, max_coeffs=100)
    with pytest.raises(LimitError):
        coefficients_by_chi(4001, 4003, max_coeffs=100)


def test_oracle_rejects_tampering():
    stream = coefficients_by_quotient(5, 7)
    gaps, _ = gapset_oracle(stream)
    assert gaps == {1, 2, 4}

    bad = stream.coeffs.copy()
    bad[1] = 1  # break the sign alternation
    tampered = type(stream)(p=5, q=7, coeffs=bad)
    with pytest.raises(ConsistencyError):
        gapset_oracle(tampered)

    flat = type(stream)(p=5, q=7, coeffs=np.array([1], dtype=np.int8))
    with pytest.raises(InputError):
        gapset_oracle(flat)


def test_gapset_formula_known():
    assert gapset_formula(3, 4).flat == (1, 2)
    assert gapset_formula(5, 7).flat == (1, 2, 4)
    assert gapset_formula(7, 8).flat == (1, 2, 3, 4, 5, 6)


def test_formula_matches_oracle():
    for p, q in coprime_pairs(50):
        res = gapset_formula(p, q)
        for builder in (coefficients_by_quotient, coefficients_by_chi):
            gaps, _ = gapset_oracle(builder(p, q))
            assert set(res.flat) == gaps
        chain = build_chain(p, lnr(q, p))
        assert res.count == sum(chain.Z) - 1
        assert len(res.flat) == res.count


def test_multiplicities():
    _, counts = gapset_oracle(coefficients_by_quotient(5, 7))
    assert counts == {1: 12, 2: 2, 4: 2}
    _, counts = gapset_oracle(coefficients_by_quotient(3, 4))
    assert counts == {1: 2, 2: 2}


def test_parts_structure():
    for p, q in coprime_pairs(30):
        res = gapset_formula(p, q)
        chain = build_chain(p, lnr(q, p))
        assert len(res.parts) == chain.t
        for i, part in enumerate(res.parts, start=1):
            top = chain.Z[i - 1] - (1 if i < chain.t else 2)
            assert len(part) == top + 1
            for z, g in enumerate(part):
                assert g == chain.r[i - 1] - z * chain.r[i] - 1
        assert res.count >= 2


def test_largest_gaps():
    assert largest_gaps(3, 4) == (2, 1)
    assert largest_gaps(5, 7) == (4, 2)
    assert largest_gaps(7, 8) == (6, 5)
    for p, q in coprime_pairs(40):
        g1, g2 = largest_gaps(p, q)
        flat = gapset_formula(p, q).flat
        assert g1 == flat[-1] == p - 1
        r = lnr(q, p)
        assert g2 == max(r - 1, p - r - 1)
        if len(flat) >= 2:
            assert g2 == flat[-2]


def test_full_range_characterization():
    # the gapset is all of {1, ..., p-1} exactly when q is +-1 mod p
    for p, q in coprime_pairs(60):
        flat = gapset_formula(p, q).flat
        full = flat == tuple(range(1, p))
        assert full == (q % p in (1, p - 1))


def test_gap_bounds():
    assert gap_bounds(3, 4) == (2, 2)
    assert gap_bounds(5, 7) == (3, 4)
    assert gap_bounds(8, 9) == (4, 7)
    assert gap_bounds(9, 10) == (5, 8)
    for p in range(3, 200):
        lo, hi = gap_bounds(p, p + 1)
        assert 2 <= lo <= hi == p - 1
    with pytest.raises(InputError):
        gap_bounds(2, 3)


def test_bounds_hold_on_sweep():
    for p, q in coprime_pairs(40):
        lo, hi = gap_bounds(p, q)
        count = gapset_formula(p, q).count
        assert lo <= count <= hi


def test_fibonacci_pair():
    assert fibonacci_pair(3) == (3, 5)
    assert fibonacci_pair(4) == (5, 8)
    assert fibonacci_pair(5) == (8, 13)
    with pytest.raises(InputError):
        fibonacci_pair(2)


def test_fibonacci_pairs_attain_lower_bound():
    for k in range(3, 12):
        p, q = fibonacci_pair(k)
        res = gapset_formula(p, q)
        lo, _ = gap_bounds(p, q)
        assert res.count == k - 1 == lo


def test_fibonacci_inequality():
    for n in range(1, 8):
        for k in range(1, 12):
            assert fibonacci_inequality_check(n, k)
    with pytest.raises(InputError):
        fibonacci_inequality_check(0, 3)
    with pytest.raises(InputError):
        fibonacci_inequality_check(3, 0)


def test_bench_helpers():
    f = bench.time_formula(13, 17, repetitions=2)
    o = bench.time_oracle(13, 17, repetitions=2)
    assert isinstance(f, int) and f > 0
    assert isinstance(o, int) and o > 0
