"""Cross-validation sweeps pairing every closed form with its oracle.

A sweep walks cells and runs the requested check suites on each:

  pair cells (p, q)   - distance sets vs sieve tables ("theorem1"), gapset
                        formula vs coefficient reading ("theorem2"), gap
                        count bounds ("theorem3"), coefficient builders
                        against each other ("oracles"), table structure and
                        symmetry ("lemmas");
  perm cells (p, u)   - dominant-difference formula vs window scan
                        ("mainlemma"), involution behavior ("lemmas");
  chain cells (p, r1) - chain identities, tail sums, representation
                        round-trip ("lemmas").

Checks report mismatches instead of raising, so a sweep always finishes and
the report lists everything it found.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dominant import (
    BOTH,
    HIGH,
    LOW,
    dominant_differences_bruteforce,
    dominant_differences_formula,
    enumerate_dominant_pairs,
    involute,
    is_dominant,
)
from .errors import InputError
from .euclid import alternating_tail_sum, build_chain, mod_inverse
from .gapset import coefficients_by_chi, coefficients_by_quotient, gap_bounds, gapset_formula, gapset_oracle
from .residue import _represent_list, lnr
from .semigroup import (
    build_tables,
    n_delta_bruteforce,
    n_delta_formula,
    s_delta_bruteforce,
    s_delta_formula,
)

CHECK_NAMES = ("theorem1", "theorem2", "theorem3", "mainlemma", "lemmas", "oracles")

# Pair suites run by default; the per-permutation and per-chain suites are
# opt-in because their cell counts grow with p, not with the pair grid.
DEFAULT_CHECKS = ("theorem1", "theorem2", "theorem3", "oracles")


@dataclass(frozen=True)
class Mismatch:
    """One failed comparison; second is q, u or r1 depending on the cell."""

    p: int
    second: int
    check: str
    expected: str
    actual: str


@dataclass(frozen=True)
class SweepReport:
    p_max: int
    q_max: int
    checks: tuple
    cells_checked: int
    mismatches: list
    elapsed_ns: int

    def to_dict(self) -> dict:
        return {
            "p_max": self.p_max,
            "q_max": self.q_max,
            "checks": list(self.checks),
            "cells_checked": self.cells_checked,
            "mismatches": [
                {
                    "p": m.p,
                    "q": m.second,
                    "check": m.check,
                    "expected": m.expected,
                    "actual": m.actual,
                }
                for m in self.mismatches
            ],
            "elapsed_ns": self.elapsed_ns,
        }


def _fmt(value) -> str:
    if isinstance(value, (set, frozenset)):
        return str(sorted(value))
    return str(value)


def _chk(out, p, second, check, expected, actual) -> None:
    if expected != actual:
        out.append(Mismatch(p, second, check, _fmt(expected), _fmt(actual)))


def _pair_theorem1(p, q, out) -> None:
    tables = build_tables(p, q)
    _chk(out, p, q, "theorem1/s_delta", s_delta_bruteforce(tables), s_delta_formula(p, q))
    _chk(out, p, q, "theorem1/n_delta", n_delta_bruteforce(tables), n_delta_formula(p, q))


def _pair_theorem2(p, q, out) -> None:
    partition = gapset_formula(p, q)
    gaps, _ = gapset_oracle(coefficients_by_chi(p, q))
    _chk(out, p, q, "theorem2/gapset", gaps, set(partition.flat))
    _chk(out, p, q, "theorem2/count", len(gaps), partition.count)


def _pair_theorem3(p, q, out) -> None:
    lower, upper = gap_bounds(p, q)
    count = gapset_formula(p, q).count
    _chk(out, p, q, "theorem3/bounds", True, lower <= count <= upper)


def _pair_oracles(p, q, out) -> None:
    phi = (p - 1) * (q - 1)
    by_quotient = coefficients_by_quotient(p, q).coeffs
    by_chi = coefficients_by_chi(p, q).coeffs
    _chk(out, p, q, "oracles/agree", True, bool(np.array_equal(by_quotient, by_chi)))
    _chk(out, p, q, "oracles/range", True, bool(np.all(np.abs(by_quotient) <= 1)))
    _chk(
        out, p, q, "oracles/palindrome",
        True, bool(np.array_equal(by_quotient, by_quotient[::-1])),
    )
    _chk(out, p, q, "oracles/ends", (1, -1, 1), (int(by_quotient[0]), int(by_quotient[1]), int(by_quotient[phi])))


def _pair_lemmas(p, q, out) -> None:
    tables = build_tables(p, q)
    ell, nn, theta, frob, phi = tables.ell, tables.nn, tables.theta, tables.frobenius, tables.phi
    diffs = np.diff(ell)
    _chk(out, p, q, "lemmas/table-top", (phi, phi - 2), (int(ell[theta]), int(ell[theta - 1])))
    _chk(out, p, q, "lemmas/unit-distance", True, bool(np.any(diffs == 1)))
    _chk(out, p, q, "lemmas/two-distance", q > p + 1, bool(np.any(diffs[: theta - 1] == 2)))
    _chk(
        out, p, q, "lemmas/symmetry",
        True, bool(np.all(nn + ell[theta - 1 :: -1] == frob)),
    )
    mask = np.zeros(phi + 1, dtype=bool)
    mask[ell] = True
    window = mask[: frob + 1]
    _chk(out, p, q, "lemmas/complement", True, bool(np.all(window != window[::-1])))


def _perm_mainlemma(p, u, out) -> None:
    formula = set(dominant_differences_formula(p, u).flat)
    scanned = set(dominant_differences_bruteforce(p, u, force=True))
    _chk(out, p, u, "mainlemma/differences", scanned, formula)


_OPPOSITE = {LOW: HIGH, HIGH: LOW, BOTH: BOTH}


def _perm_lemmas(p, u, out) -> None:
    for a, b, kind in enumerate_dominant_pairs(p, u, force=True):
        image = involute(p, u, (a, b))
        _chk(out, p, u, f"lemmas/involution-order[{a},{b}]", (a, b), involute(p, u, image))
        _chk(out, p, u, f"lemmas/involution-difference[{a},{b}]", b - a, image[1] - image[0])
        _chk(
            out, p, u, f"lemmas/involution-kind[{a},{b}]",
            _OPPOSITE[kind], is_dominant(p, u, image[0], image[1]),
        )


def _chain_lemmas(p, r1, out) -> None:
    chain = build_chain(p, r1)
    t, r, Z, s = chain.t, chain.r, chain.Z, chain.s
    for i in range(1, t + 2):
        _chk(out, p, r1, f"lemmas/fold[{i}]", p, s[i] * r[i - 1] + s[i - 1] * r[i])
    for i in range(1, t + 1):
        want = r[i - 1] - 1 if (t - i) % 2 else r[i - 1]
        _chk(out, p, r1, f"lemmas/tail[{i}]", want, alternating_tail_sum(chain, i))
    _chk(
        out, p, r1, "lemmas/quotient-weight",
        p - 1 + s[t], sum(Z[i - 1] * s[i] for i in range(1, t + 1)),
    )
    u = mod_inverse(r1, p)
    for i in range(1, t + 1):
        signed = r[i] if i % 2 else -r[i]
        _chk(out, p, r1, f"lemmas/residue[{i}]", s[i], lnr(u * signed, p))
    seen = set()
    top_weight = 0
    for n in range(p):
        z = _represent_list(chain, n)
        value = sum(zi * r[i] if i % 2 else -zi * r[i] for i, zi in enumerate(z, start=1))
        if value != n:
            _chk(out, p, r1, f"lemmas/roundtrip[{n}]", n, value)
        weight = sum(zi * s[i] for i, zi in enumerate(z, start=1))
        if weight != lnr(u * n, p):
            _chk(out, p, r1, f"lemmas/weight[{n}]", lnr(u * n, p), weight)
        first = next((i for i, zi in enumerate(z, start=1) if zi), None)
        admissible = (
            all(0 <= zi <= Z[i - 1] for i, zi in enumerate(z, start=1))
            and z[-1] < Z[-1]
            and (first is None or first % 2 == 1)
        )
        if not admissible:
            _chk(out, p, r1, f"lemmas/admissible[{n}]", True, False)
        top_weight = max(top_weight, weight)
        seen.add(tuple(z))
    _chk(out, p, r1, "lemmas/distinct-tuples", p, len(seen))
    _chk(out, p, r1, "lemmas/max-weight", p - 1, top_weight)


_PAIR_SUITE = {
    "theorem1": _pair_theorem1,
    "theorem2": _pair_theorem2,
    "theorem3": _pair_theorem3,
    "oracles": _pair_oracles,
    "lemmas": _pair_lemmas,
}
_PERM_SUITE = {"mainlemma": _perm_mainlemma, "lemmas": _perm_lemmas}
_CHAIN_SUITE = {"lemmas": _chain_lemmas}


def normalize_checks(checks) -> tuple:
    """Validate and order a collection of check names; 'all' expands."""
    names = []
    for name in checks:
        if name == "all":
            names.extend(CHECK_NAMES)
        elif name in CHECK_NAMES:
            names.append(name)
        else:
            raise InputError(f"unknown check {name!r} (known: {', '.join(CHECK_NAMES)}, all)")
    if not names:
        raise InputError("no checks requested")
    return tuple(n for n in CHECK_NAMES if n in names)


def _build_tasks(p_max, q_max, checks) -> list:
    pair_names = tuple(n for n in checks if n in _PAIR_SUITE)
    perm_names = tuple(n for n in checks if n in _PERM_SUITE)
    chain_names = tuple(n for n in checks if n in _CHAIN_SUITE)
    tasks = []
    for p in range(3, p_max + 1):
        if pair_names:
            for q in range(p + 1, q_max + 1):
                if math.gcd(p, q) == 1:
                    tasks.append(("pair", p, q, pair_names))
        if perm_names or chain_names:
            for v in range(1, p):
                if math.gcd(v, p) != 1:
                    continue
                if perm_names:
                    tasks.append(("perm", p, v, perm_names))
                if chain_names:
                    tasks.append(("chain", p, v, chain_names))
    return tasks


_SUITES = {"pair": _PAIR_SUITE, "perm": _PERM_SUITE, "chain": _CHAIN_SUITE}


def _run_cell(task) -> list:
    kind, a, b, names = task
    suite = _SUITES[kind]
    out = []
    for name in names:
        suite[name](a, b, out)
    return out


def run_sweep(p_max: int, q_max=None, checks=DEFAULT_CHECKS, jobs: int = 1) -> SweepReport:
    """Run the requested suites over every cell up to the given bounds."""
    started = time.perf_counter_ns()
    if p_max < 3:
        raise InputError(f"p_max must be at least 3: got {p_max}")
    if q_max is None:
        q_max = p_max
    elif q_max < p_max:
        raise InputError(f"q_max must be at least p_max: got {q_max} < {p_max}")
    names = normalize_checks(checks)
    tasks = _build_tasks(p_max, q_max, names)
    if jobs > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, tasks, chunksize=chunk))
    else:
        results = [_run_cell(task) for task in tasks]
    mismatches = [m for cell in results for m in cell]
    return SweepReport(
        p_max=p_max,
        q_max=q_max,
        checks=names,
        cells_checked=len(tasks),
        mismatches=mismatches,
        elapsed_ns=time.perf_counter_ns() - started,
    )
