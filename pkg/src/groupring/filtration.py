"""
Augmentation-ideal filtration I^1 > I^2 > ... of Z[G].

Lattices live in I-coordinates: sum x_g g with sum x_g = 0 is the vector
(x_g) over g != 1, i.e. coordinates in the basis g - 1, so I^1 = Z^(n-1).
Since I^r is an ideal, I^{r+1} = I^r * I is spanned by b * (gen - 1) with b
running over a Z-basis of I^r and gen over the cyclic generators.

I^r / I^{r+1} is a quotient of (I/I^2)^{(x) r} = G^{(x) r}, so the exponent e
of G kills it and I^{r+1} contains e^r * I. Each power is therefore one
echelon pass modulo e^r. Membership over Q or Z[1/S] is decided on the
integral lattice.
"""

import threading
from dataclasses import dataclass
from enum import Enum
from math import lcm
from typing import Optional

from ..core.constants import DEFAULT_R_MAX
from ..core.logging import debug_log
from .element import CoefficientRing, GroupRingElement
from .group import AbelianGroup
from .lattice import Lattice


class OrdKind(Enum):
    """Shape of an order-of-vanishing answer."""
    FINITE = "finite"          # xi in I^r but not I^{r+1}
    AT_LEAST = "at-least"      # xi in I^value, search depth exhausted
    STABILIZED = "stabilized"  # xi in I^value = I^{value+1} = ...
    ZERO = "zero"              # xi = 0


@dataclass(frozen=True)
class OrdResult:
    """ord_R(xi) with the infinite cases kept apart."""
    kind: OrdKind
    value: int = 0

    @classmethod
    def finite(cls, r: int) -> "OrdResult":
        return cls(OrdKind.FINITE, r)

    @property
    def is_finite(self) -> bool:
        return self.kind is OrdKind.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind in (OrdKind.STABILIZED, OrdKind.ZERO)

    def at_least(self, r: int) -> bool:
        """Whether the result certifies ord >= r."""
        if self.kind in (OrdKind.FINITE, OrdKind.AT_LEAST):
            return self.value >= r
        return True

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "value": self.value, "text": str(self)}

    def __str__(self) -> str:
        if self.kind is OrdKind.FINITE:
            return str(self.value)
        if self.kind is OrdKind.AT_LEAST:
            return f">={self.value}"
        if self.kind is OrdKind.STABILIZED:
            return f"stabilized@{self.value}"
        return "zero"


class AugmentationFiltration:
    """Lazily extended list of integral lattices I^1, I^2, ... for one group."""

    def __init__(self, group: AbelianGroup):
        self.group = group
        self._lock = threading.RLock()
        self._powers: list[Lattice] = []
        self._stable: dict[tuple[int, str], bool] = {}

    @property
    def exponent(self) -> int:
        return lcm(*self.group.orders) if self.group.orders else 1

    def _first_power(self) -> Lattice:
        n = self.group.order
        return Lattice(n - 1, modulus=1)

    def _next_power(self, previous: Lattice, r: int) -> Lattice:
        """I^{r+1} from a basis of I^r."""
        n = self.group.order
        table = self.group.mul_table
        lattice = Lattice(n - 1, modulus=self.exponent ** r)
        for row in previous.basis:
            full = [-sum(row)] + row
            for gen in self.group.generators:
                shift = table[gen]
                vec = [-x for x in full]
                for i, x in enumerate(full):
                    if x:
                        vec[shift[i]] += x
                lattice.add_vector(vec[1:])
        lattice.hermite_reduce()
        return lattice

    def power(self, r: int) -> Lattice:
        """Integral lattice of I^r (r >= 1) in I-coordinates."""
        if r < 1:
            raise ValueError(f"power must be >= 1, got {r}")
        with self._lock:
            while len(self._powers) < r:
                if not self._powers:
                    self._powers.append(self._first_power())
                else:
                    self._powers.append(self._next_power(self._powers[-1], len(self._powers)))
                debug_log(
                    f"I^{len(self._powers)} of {self.group.structure}: "
                    f"index {self._powers[-1].index()}"
                )
            return self._powers[r - 1]

    def is_stable(self, r: int, ring: CoefficientRing) -> bool:
        """Whether I_R^r = I_R^{r+1}."""
        key = (r, ring.name)
        with self._lock:
            if key not in self._stable:
                self._stable[key] = self.power(r).issubset(self.power(r + 1), ring)
            return self._stable[key]

    def contains(self, xi: GroupRingElement, r: int, ring: CoefficientRing) -> bool:
        if r <= 0:
            return True
        if self.group.order == 1:
            return xi.is_zero()
        if xi.augmentation() != 0:
            return False
        if r == 1:
            return all(ring.is_unit(c.denominator) for c in xi.coeffs)
        return self.power(r).contains_over(xi.coeffs[1:], ring)


_filtrations: dict[tuple, AugmentationFiltration] = {}
_filtrations_lock = threading.Lock()


def filtration_for(group: AbelianGroup) -> AugmentationFiltration:
    """Shared filtration for every group with the same invariant factors."""
    with _filtrations_lock:
        filt = _filtrations.get(group.structure)
        if filt is None:
            filt = _filtrations[group.structure] = AugmentationFiltration(AbelianGroup(group.structure))
        return filt


def in_power(xi: GroupRingElement, r: int, ring: Optional[CoefficientRing] = None) -> bool:
    """Whether xi lies in I_R(G)^r."""
    ring = ring or xi.ring
    if r <= 0:
        return True
    if xi.augmentation() != 0:
        return False
    return filtration_for(xi.group).contains(xi, r, ring)


def augmentation_order(
    xi: GroupRingElement,
    r_max: int = DEFAULT_R_MAX,
    ring: Optional[CoefficientRing] = None,
) -> OrdResult:
    """
    Largest r with xi in I_R^r.

    ZERO for xi = 0; STABILIZED(r) when xi lies in I^r and the filtration is
    constant from r on; AT_LEAST(r_max + 1) when xi survives every tested
    power.
    """
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")
    ring = ring or xi.ring
    if xi.is_zero():
        return OrdResult(OrdKind.ZERO)
    if xi.augmentation() != 0:
        return OrdResult.finite(0)

    filt = filtration_for(xi.group)
    for r in range(1, r_max + 1):
        if not filt.contains(xi, r + 1, ring):
            return OrdResult.finite(r)
        if filt.is_stable(r, ring):
            return OrdResult(OrdKind.STABILIZED, r)
    return OrdResult(OrdKind.AT_LEAST, r_max + 1)
