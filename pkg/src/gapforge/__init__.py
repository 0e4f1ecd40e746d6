"""Gap structure of two-generator numerical semigroups and the
inclusion-exclusion polynomials attached to them.

Closed forms come from the Euclidean remainder chain of the generators;
every one has a brute-force oracle next to it, and the verify sweeps compare
the two over whole ranges.
"""

from .backend import active_backend, available_backends, use_backend
from .dominant import (
    BOTH,
    HIGH,
    LOW,
    DominantDifferences,
    dominant_differences_bruteforce,
    dominant_differences_formula,
    enumerate_dominant_pairs,
    involute,
    is_dominant,
)
from .errors import ConsistencyError, InputError, LimitError
from .euclid import EuclidChain, alternating_tail_sum, build_chain, mod_inverse
from .gapset import (
    CoefficientStream,
    GapPartition,
    coefficients_by_chi,
    coefficients_by_quotient,
    fibonacci_inequality_check,
    fibonacci_pair,
    gap_bounds,
    gapset_formula,
    gapset_oracle,
    largest_gaps,
)
from .residue import (
    ZTuple,
    all_representations,
    iter_admissible,
    lnr,
    permuted_value,
    r_value,
    represent,
)
from .semigroup import (
    SemigroupTables,
    build_tables,
    crt_triple,
    frobenius,
    is_representable,
    n_delta_bruteforce,
    n_delta_formula,
    ordered_pair,
    s_delta_bruteforce,
    s_delta_formula,
    validate_pair,
)
from .verify import Mismatch, SweepReport, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BOTH",
    "HIGH",
    "LOW",
    "CoefficientStream",
    "ConsistencyError",
    "DominantDifferences",
    "EuclidChain",
    "GapPartition",
    "InputError",
    "LimitError",
    "Mismatch",
    "SemigroupTables",
    "SweepReport",
    "ZTuple",
    "active_backend",
    "all_representations",
    "alternating_tail_sum",
    "available_backends",
    "build_chain",
    "build_tables",
    "coefficients_by_chi",
    "coefficients_by_quotient",
    "crt_triple",
    "dominant_differences_bruteforce",
    "dominant_differences_formula",
    "enumerate_dominant_pairs",
    "fibonacci_inequality_check",
    "fibonacci_pair",
    "frobenius",
    "gap_bounds",
    "gapset_formula",
    "gapset_oracle",
    "involute",
    "is_dominant",
    "is_representable",
    "iter_admissible",
    "largest_gaps",
    "lnr",
    "mod_inverse",
    "n_delta_bruteforce",
    "n_delta_formula",
    "ordered_pair",
    "permuted_value",
    "r_value",
    "represent",
    "run_sweep",
    "s_delta_bruteforce",
    "s_delta_formula",
    "use_backend",
    "validate_pair",
]
