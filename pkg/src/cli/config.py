"""
Run configuration: command-line flags layered over EngineSettings.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..config import PARITY_RINGS, EngineSettings
from ..core.constants import (
    DEFAULT_DIGITS,
    DEFAULT_EIGEN_PRIME_BOUND,
    DEFAULT_POINT_COUNT_BOUND,
    DEFAULT_R_MAX,
    DEFAULT_SPECIAL_MAX_MODULUS,
)
from ..core.formatting import parse_int_range

# Checks the verify battery knows about, in report order
CHECKS = ("theta", "ord", "norm", "funceq", "parity", "special", "mazur-tate")

# Checks each verb runs unless --checks narrows them
VERB_CHECKS = {
    "theta": ("theta",),
    "ord": ("ord",),
    "verify": CHECKS,
    "special": ("special",),
    "lvalue": (),
    "dump-space": (),
}

OUTPUT_FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    """Everything one invocation needs."""
    verb: str
    curves_path: Path
    moduli: list[int] = field(default_factory=list)
    curve_label: Optional[str] = None
    checks: tuple[str, ...] = CHECKS
    r_max: int = DEFAULT_R_MAX
    digits: int = DEFAULT_DIGITS
    cache_dir: Optional[Path] = None
    use_cache: bool = True
    output_format: str = "text"
    output_path: Optional[Path] = None
    parity_ring: str = "Z[1/2]"
    point_bound: int = DEFAULT_POINT_COUNT_BOUND
    eigen_prime_bound: int = DEFAULT_EIGEN_PRIME_BOUND
    special_max_modulus: int = DEFAULT_SPECIAL_MAX_MODULUS
    workers: int = 1
    show_progress: bool = True

    def __post_init__(self):
        if self.verb not in VERB_CHECKS:
            raise ValueError(f"unknown verb {self.verb!r}")
        minimum = 1 if self.verb == "lvalue" else 3
        bad = [M for M in self.moduli if M < minimum]
        if bad:
            raise ValueError(f"moduli must be >= {minimum}, got {bad}")
        if self.verb in ("theta", "ord", "verify", "special") and not self.moduli:
            raise ValueError(f"{self.verb} needs --modulus or --moduli")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
        if VERB_CHECKS[self.verb] and not self.checks:
            raise ValueError("no checks selected")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.output_format == "csv" and self.verb != "special":
            raise ValueError("csv output is only available for the special verb")
        if self.parity_ring not in PARITY_RINGS:
            raise ValueError(f"parity ring must be one of {', '.join(PARITY_RINGS)}")
        if self.r_max < 1:
            raise ValueError(f"r_max must be >= 1, got {self.r_max}")
        if self.digits < 1:
            raise ValueError(f"digits must be >= 1, got {self.digits}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    def wants(self, check: str) -> bool:
        return check in self.checks

    @classmethod
    def from_args(cls, args, settings: EngineSettings) -> "RunConfig":
        """Build from parsed argparse flags; unset flags fall back to settings."""
        if args.modulus is not None:
            moduli = [args.modulus]
        elif args.moduli:
            moduli = parse_int_range(args.moduli)
        else:
            moduli = []

        defaults = VERB_CHECKS[args.verb]
        if args.checks:
            checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        else:
            checks = defaults

        return cls(
            verb=args.verb,
            curves_path=Path(args.curves),
            moduli=moduli,
            curve_label=None if args.all else args.curve,
            checks=checks,
            r_max=args.rmax if args.rmax is not None else settings.r_max,
            digits=args.digits if args.digits is not None else settings.digits,
            cache_dir=Path(args.cache) if args.cache else None,
            use_cache=settings.cache_enabled and not args.no_cache,
            output_format=args.format,
            output_path=Path(args.output) if args.output else None,
            parity_ring=args.parity_ring or settings.parity_ring,
            point_bound=settings.point_count_bound,
            eigen_prime_bound=settings.eigen_prime_bound,
            special_max_modulus=settings.special_max_modulus,
            workers=args.workers,
            show_progress=not args.no_progress,
        )
