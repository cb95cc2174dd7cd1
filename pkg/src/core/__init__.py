"""
Core utilities for Stickel.

Shared constants, paths, logging, errors, integer arithmetic and formatting.
"""

from .constants import (
    AP_CACHE_MAGIC,
    PERIOD_MAP_MAGIC,
    DEFAULT_POINT_COUNT_BOUND,
    DEFAULT_EIGEN_PRIME_BOUND,
    DEFAULT_R_MAX,
    DEFAULT_DIGITS,
)

from .paths import (
    get_app_dir,
    get_data_dir,
    get_settings_path,
    get_cache_dir,
    get_logs_dir,
    atomic_write_text,
)

from .logging import TeeOutput, debug_log, start_session_log

from .errors import (
    StickelError,
    DiscriminantZero,
    InconsistentConductor,
    NotProjectivePoint,
    InconsistentInput,
    EigenspaceNotRankOne,
    EigenspaceEmpty,
    NotEigenvector,
    ModulusTooSmall,
    NotAUnit,
    NotADivisor,
    HypothesisViolated,
    NotPrimitive,
    PrecisionNotReached,
    ParseError,
)

from .formatting import (
    format_duration,
    format_rational,
    format_complex,
    parse_int_range,
)

from .progress import ProgressTracker

__all__ = [
    # Constants
    "AP_CACHE_MAGIC",
    "PERIOD_MAP_MAGIC",
    "DEFAULT_POINT_COUNT_BOUND",
    "DEFAULT_EIGEN_PRIME_BOUND",
    "DEFAULT_R_MAX",
    "DEFAULT_DIGITS",
    # Paths
    "get_app_dir",
    "get_data_dir",
    "get_settings_path",
    "get_cache_dir",
    "get_logs_dir",
    "atomic_write_text",
    # Logging
    "TeeOutput",
    "debug_log",
    "start_session_log",
    # Errors
    "StickelError",
    "DiscriminantZero",
    "InconsistentConductor",
    "NotProjectivePoint",
    "InconsistentInput",
    "EigenspaceNotRankOne",
    "EigenspaceEmpty",
    "NotEigenvector",
    "ModulusTooSmall",
    "NotAUnit",
    "NotADivisor",
    "HypothesisViolated",
    "NotPrimitive",
    "PrecisionNotReached",
    "ParseError",
    # Formatting
    "format_duration",
    "format_rational",
    "format_complex",
    "parse_int_range",
    # Progress
    "ProgressTracker",
]
