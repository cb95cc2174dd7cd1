"""
Mazur-Tate elements Theta_M = sum over a in (Z/M)*/{+-1} of [a/M]_A sigma_a.

The 1/2 in front of the sum over all units cancels against the pairing
{a, -a}, since [a/M] = [-a/M]; the element is integral whenever the
period map is.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..core.arith import prime_divisors
from ..core.constants import DEFAULT_POINT_COUNT_BOUND, DEFAULT_R_MAX
from ..core.errors import InconsistentInput
from ..curve.reduction import ReductionKind, reduce_mod_p
from ..curve.weierstrass import CurveData
from ..groupring import (
    INTEGERS,
    RATIONALS,
    CoefficientRing,
    GroupRingElement,
    OrdResult,
    augmentation_order,
    galois_group,
)
from ..maninsym import RationalPeriodMap, symbol_value


@dataclass
class ThetaElement:
    """Theta_{A,M} in Z[G_M] with the data it was built from."""
    curve: CurveData
    modulus: int
    element: GroupRingElement
    normalization_id: str
    s_m: frozenset[int] = frozenset()
    _ords: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def group(self):
        return self.element.group

    @property
    def s_m_size(self) -> int:
        return len(self.s_m)

    def ord(self, r_max: int = DEFAULT_R_MAX, ring: CoefficientRing = INTEGERS) -> OrdResult:
        """ord_R(Theta), memoised per (r_max, ring)."""
        key = (r_max, ring.name)
        if key not in self._ords:
            self._ords[key] = augmentation_order(self.element, r_max, ring)
        return self._ords[key]

    def computed_ords(self) -> dict[str, OrdResult]:
        return {name: result for (_, name), result in self._ords.items()}

    def dump(self) -> str:
        return self.element.dump()

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.name,
            "modulus": self.modulus,
            "element": self.dump(),
            "normalization": self.normalization_id,
            "s_m": sorted(self.s_m),
            "s_m_size": self.s_m_size,
            "ord": {name: result.to_dict() for name, result in self.computed_ords().items()},
        }


def _check_map(curve: CurveData, period_map: RationalPeriodMap):
    if period_map.curve.coefficients != curve.coefficients or period_map.level != curve.conductor:
        raise InconsistentInput(f"period map of {period_map.curve.name} used for {curve.name}")


def s_m_set(curve: CurveData, M: int, bound: int = DEFAULT_POINT_COUNT_BOUND) -> frozenset[int]:
    """Primes p | M at which curve has split multiplicative reduction."""
    return frozenset(
        p for p in prime_divisors(M)
        if curve.conductor % p == 0
        and reduce_mod_p(curve, p, bound).kind is ReductionKind.SPLIT_MULTIPLICATIVE
    )


@lru_cache(maxsize=512)
def _theta_coeffs(period_map: RationalPeriodMap, M: int) -> tuple[Fraction, ...]:
    G = galois_group(M)
    return tuple(Fraction(symbol_value(period_map, Fraction(G.representative(i), M))) for i in range(G.order))


def theta(
    curve: CurveData,
    period_map: RationalPeriodMap,
    M: int,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> ThetaElement:
    """
    Theta_{A,M} for M >= 3.

    Raises:
        ModulusTooSmall: M < 3
        InconsistentInput: period map belongs to another curve
    """
    _check_map(curve, period_map)
    G = galois_group(M)
    coeffs = _theta_coeffs(period_map, M)
    element = GroupRingElement(G, coeffs, _ring_for(coeffs))
    return ThetaElement(
        curve=curve,
        modulus=M,
        element=element,
        normalization_id=period_map.normalization_id,
        s_m=s_m_set(curve, M, bound),
    )


def theta_central(period_map: RationalPeriodMap) -> Fraction:
    """The M = 1 value (1/2)[0]_A."""
    return Fraction(symbol_value(period_map, Fraction(0)), 2)


def theta_scalar(period_map: RationalPeriodMap, M: int) -> Fraction:
    """[1/M]_A for M in {1, 2}, where G_M is not defined and every unit gives the same value."""
    if M not in (1, 2):
        raise ValueError(f"scalar theta only for M = 1, 2, got {M}")
    return Fraction(symbol_value(period_map, Fraction(1, M)))


def half_sum(period_map: RationalPeriodMap, M: int) -> GroupRingElement:
    """(1/2) sum over every unit a mod M of [a/M] sigma_a, straight from the definition."""
    G = galois_group(M)
    values = {
        a: Fraction(symbol_value(period_map, Fraction(a, M)), 2)
        for a in range(1, M) if gcd(a, M) == 1
    }
    summed = GroupRingElement.from_residues(G, values, RATIONALS)
    return summed.with_ring(_ring_for(summed.coeffs))


def _ring_for(coeffs) -> CoefficientRing:
    return INTEGERS if all(Fraction(c).denominator == 1 for c in coeffs) else RATIONALS
