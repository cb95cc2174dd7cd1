"""
Engine settings for Stickel.

Manages .stickel/settings.json - defaults that persist across runs. Command
line flags override them for a single run.
"""

import json
from pathlib import Path

from ..core.constants import (
    DEFAULT_DIGITS,
    DEFAULT_EIGEN_PRIME_BOUND,
    DEFAULT_POINT_COUNT_BOUND,
    DEFAULT_R_MAX,
    DEFAULT_SPECIAL_MAX_MODULUS,
)
from ..core.paths import atomic_write_text

# Coefficient rings accepted for the parity check
PARITY_RINGS = ("Z[1/2]", "Q")


class EngineSettings:
    """
    Manages .stickel/settings.json.

    Stores:
    - Prime bounds for point counting and eigenspace cutting
    - Default filtration depth and L-value precision
    - Coefficient ring for the parity check
    - Whether disk caches are used
    """

    def __init__(self, path: Path):
        self.path = path
        self.point_count_bound: int = DEFAULT_POINT_COUNT_BOUND
        self.eigen_prime_bound: int = DEFAULT_EIGEN_PRIME_BOUND
        self.r_max: int = DEFAULT_R_MAX
        self.digits: int = DEFAULT_DIGITS
        self.parity_ring: str = "Z[1/2]"
        self.special_max_modulus: int = DEFAULT_SPECIAL_MAX_MODULUS
        self.cache_enabled: bool = True
        # True when no usable file was found
        self._is_new: bool = False

    @classmethod
    def load(cls, path: Path) -> "EngineSettings":
        """Load settings from file, falling back to defaults."""
        settings = cls(path)

        if path.exists():
            try:
                with open(path) as f:
                    data = json.load(f)

                settings.point_count_bound = int(data.get("point_count_bound", DEFAULT_POINT_COUNT_BOUND))
                settings.eigen_prime_bound = int(data.get("eigen_prime_bound", DEFAULT_EIGEN_PRIME_BOUND))
                settings.r_max = int(data.get("r_max", DEFAULT_R_MAX))
                settings.digits = int(data.get("digits", DEFAULT_DIGITS))
                settings.parity_ring = data.get("parity_ring", "Z[1/2]")
                settings.special_max_modulus = int(data.get("special_max_modulus", DEFAULT_SPECIAL_MAX_MODULUS))
                settings.cache_enabled = bool(data.get("cache_enabled", True))
            except (json.JSONDecodeError, IOError, TypeError, ValueError):
                settings = cls(path)
                settings._is_new = True
        else:
            settings._is_new = True

        if settings.parity_ring not in PARITY_RINGS:
            settings.parity_ring = "Z[1/2]"
        if settings.r_max < 1:
            settings.r_max = DEFAULT_R_MAX

        return settings

    @property
    def is_new(self) -> bool:
        return self._is_new

    def to_dict(self) -> dict:
        return {
            "point_count_bound": self.point_count_bound,
            "eigen_prime_bound": self.eigen_prime_bound,
            "r_max": self.r_max,
            "digits": self.digits,
            "parity_ring": self.parity_ring,
            "special_max_modulus": self.special_max_modulus,
            "cache_enabled": self.cache_enabled,
        }

    def save(self):
        """Save settings to file."""
        atomic_write_text(self.path, json.dumps(self.to_dict(), indent=2) + "\n")
        self._is_new = False
