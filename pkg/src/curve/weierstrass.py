"""
Weierstrass models of elliptic curves over Q.
"""

import hashlib
from dataclasses import dataclass
from typing import Optional

from ..core.errors import DiscriminantZero, InconsistentConductor


def b_invariants(a1: int, a2: int, a3: int, a4: int, a6: int) -> tuple[int, int, int, int]:
    """Return (b2, b4, b6, b8) of [a1, a2, a3, a4, a6]."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def discriminant(a1: int, a2: int, a3: int, a4: int, a6: int) -> int:
    """Discriminant of the model [a1, a2, a3, a4, a6]."""
    b2, b4, b6, b8 = b_invariants(a1, a2, a3, a4, a6)
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


@dataclass(frozen=True)
class CurveData:
    """Minimal model y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6 with its conductor."""
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    conductor: int
    rank_hint: Optional[int] = None
    label: Optional[str] = None

    def __post_init__(self):
        if self.disc == 0:
            raise DiscriminantZero(f"{self.name}: singular model {list(self.coefficients)}")
        if self.conductor < 11:
            raise InconsistentConductor(
                f"{self.name}: conductor {self.conductor} < 11 is impossible over Q"
            )
        if self.rank_hint is not None and self.rank_hint < 0:
            raise ValueError(f"{self.name}: negative rank {self.rank_hint}")

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def disc(self) -> int:
        return discriminant(*self.coefficients)

    @property
    def name(self) -> str:
        """Label if known, else the coefficient list."""
        if self.label:
            return self.label
        return "[" + ",".join(str(a) for a in self.coefficients) + "]"

    @property
    def cache_key(self) -> str:
        """Filesystem-safe key that changes with the model or the conductor."""
        raw = ",".join(str(a) for a in self.coefficients) + f";{self.conductor}"
        digest = hashlib.sha1(raw.encode()).hexdigest()[:10]
        stem = "".join(ch for ch in (self.label or "curve") if ch.isalnum())
        return f"{stem}_{digest}"

    def __str__(self) -> str:
        return f"{self.name} (N={self.conductor})"
