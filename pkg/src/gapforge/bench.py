"""Timing helpers comparing the closed form against the coefficient oracle."""
from __future__ import annotations

import statistics
import time

from .gapset import coefficients_by_quotient, gapset_formula, gapset_oracle


def _median_ns(fn, repetitions: int) -> int:
    if repetitions < 1:
        raise ValueError(f"repetitions must be positive: got {repetitions}")
    samples = []
    for _ in range(repetitions):
        started = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - started)
    return int(statistics.median(samples))


def time_formula(p: int, q: int, repetitions: int = 5) -> int:
    """Median wall time of the closed-form gapset, in nanoseconds."""
    return _median_ns(lambda: gapset_formula(p, q), repetitions)


def time_oracle(p: int, q: int, repetitions: int = 5, max_coeffs=None) -> int:
    """Median wall time of the full oracle path (build + read), in ns."""

    def run():
        gapset_oracle(coefficients_by_quotient(p, q, max_coeffs=max_coeffs))

    return _median_ns(run, repetitions)
