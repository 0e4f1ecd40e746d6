"""Safety caps for oracle-sized allocations."""
import os

# Generators stay below 2^31 so products fit comfortably in the signed
# 64-bit arithmetic of the compiled kernels.
MAX_GENERATOR = 2**31

DEFAULT_MAX_ORACLE_COEFFS = 10**8


def oracle_cap(override=None) -> int:
    """Cap on materialized coefficient/table cells.

    An explicit argument wins, then the GAPFORGE_MAX_ORACLE_COEFFS
    environment variable, then the built-in default.
    """
    if override is not None:
        return int(override)
    env = os.environ.get("GAPFORGE_MAX_ORACLE_COEFFS")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_ORACLE_COEFFS
