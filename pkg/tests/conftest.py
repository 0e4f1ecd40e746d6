import math

import pytest

from gapforge import available_backends, use_backend


def coprime_pairs(p_max, q_max=None):
    """All (p, q) with 3 <= p < q <= q_max and gcd(p, q) = 1."""
    if q_max is None:
        q_max = p_max
    return [
        (p, q)
        for p in range(3, p_max + 1)
        for q in range(p + 1, q_max + 1)
        if math.gcd(p, q) == 1
    ]


def coprime_units(p):
    """All u in [1, p) coprime to p."""
    return [u for u in range(1, p) if math.gcd(u, p) == 1]


@pytest.fixture(params=sorted(available_backends()))
def any_backend(request):
    with use_backend(request.param):
        yield request.param


class AcceptanceEntry:
    """One criterion's summary line; starts failed, finish() flips it."""

    def __init__(self, label, title):
        self.label = label
        self.title = title
        self.status = "FAIL"
        self.detail = "did not run to completion"

    def finish(self, detail):
        self.status = "PASS"
        self.detail = detail
        print(self.line())

    def line(self):
        return f"[acceptance] {self.label} ({self.title}): {self.status} ({self.detail})"


_ACCEPTANCE_ENTRIES = []


def begin_acceptance(label, title):
    entry = AcceptanceEntry(label, title)
    _ACCEPTANCE_ENTRIES.append(entry)
    return entry


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # echo the per-criterion lines even when stdout capture is on
    if _ACCEPTANCE_ENTRIES:
        terminalreporter.section("acceptance criteria")
        for entry in _ACCEPTANCE_ENTRIES:
            terminalreporter.write_line(entry.line())
