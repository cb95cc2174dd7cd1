"""
Elliptic-curve arithmetic over Q and finite fields.

Point counting, reduction types and Fourier-coefficient tables.
"""

from .weierstrass import CurveData, b_invariants, discriminant
from .reduction import (
    ReductionKind,
    ReductionInfo,
    count_points,
    count_points_bruteforce,
    reduce_mod_p,
    bad_reduction,
    validate_conductor,
    root_number_from_reduction,
    hasse_bound_holds,
)
from .coefficients import (
    ap_table,
    an_table,
    ap_cache_path,
    read_ap_cache,
    write_ap_cache,
    clear_memory_cache,
)

__all__ = [
    "CurveData",
    "b_invariants",
    "discriminant",
    "ReductionKind",
    "ReductionInfo",
    "count_points",
    "count_points_bruteforce",
    "reduce_mod_p",
    "bad_reduction",
    "validate_conductor",
    "root_number_from_reduction",
    "hasse_bound_holds",
    "ap_table",
    "an_table",
    "ap_cache_path",
    "read_ap_cache",
    "write_ap_cache",
    "clear_memory_cache",
]
