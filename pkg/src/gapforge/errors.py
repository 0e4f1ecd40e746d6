"""Exception types shared across the package."""


class InputError(ValueError):
    """Arguments fall outside a function's documented domain."""


class LimitError(RuntimeError):
    """A computation would exceed a safety cap and was not forced."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree.

    This always indicates a bug, never bad input.
    """
