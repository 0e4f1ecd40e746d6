"""Selects the compiled or pure-Python kernel implementations.

The compiled extension is preferred when importable; GAPFORGE_BACKEND=c or
GAPFORGE_BACKEND=python forces the choice at import time, and use_backend()
switches it temporarily within a process (tests, benchmarks).
"""
from __future__ import annotations

import contextlib
import os

from . import _pykernels
from .errors import InputError

try:
    from . import _kernels
except ImportError:
    _kernels = None

_BY_NAME = {"python": _pykernels}
if _kernels is not None:
    _BY_NAME["c"] = _kernels


def _initial() -> str:
    forced = os.environ.get("GAPFORGE_BACKEND")
    if forced:
        if forced not in ("c", "python"):
            raise ImportError(f"GAPFORGE_BACKEND must be 'c' or 'python': got {forced!r}")
        if forced not in _BY_NAME:
            raise ImportError("GAPFORGE_BACKEND=c but the compiled kernels are not built")
        return forced
    return "c" if _kernels is not None else "python"


_active = _initial()


def active_backend() -> str:
    """Name of the kernel set in use: 'c' or 'python'."""
    return _active


def available_backends() -> tuple:
    return tuple(sorted(_BY_NAME))


def kernels():
    """The active kernel module."""
    return _BY_NAME[_active]


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily force a kernel set; restores the previous one on exit."""
    global _active
    if name not in _BY_NAME:
        raise InputError(f"backend {name!r} is not available (have: {available_backends()})")
    previous = _active
    _active = name
    try:
        yield
    finally:
        _active = previous
