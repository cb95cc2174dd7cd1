"""
Reduction of elliptic curves modulo primes.

Points are counted naively over F_p. For bad p the singular point is part
of the count, so a_p = p + 1 - #E(F_p) holds for every prime and equals
p - #E_ns(F_p) at bad primes.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..core.arith import isprime, prime_divisors, valuation
from ..core.constants import DEFAULT_POINT_COUNT_BOUND
from ..core.errors import InconsistentConductor
from .weierstrass import CurveData


class ReductionKind(Enum):
    """Reduction type of a curve at a prime."""
    GOOD = "good"
    SPLIT_MULTIPLICATIVE = "split"
    NONSPLIT_MULTIPLICATIVE = "nonsplit"
    ADDITIVE = "additive"

    @property
    def is_bad(self) -> bool:
        return self is not ReductionKind.GOOD

    @property
    def is_multiplicative(self) -> bool:
        return self in (ReductionKind.SPLIT_MULTIPLICATIVE, ReductionKind.NONSPLIT_MULTIPLICATIVE)


@dataclass(frozen=True)
class ReductionInfo:
    """Reduction type and trace of Frobenius at one prime."""
    prime: int
    kind: ReductionKind
    ap: int


def count_points(curve: CurveData, p: int) -> int:
    """#E(F_p) of the reduced projective cubic, singular point included."""
    a1, a2, a3, a4, a6 = (a % p for a in curve.coefficients)
    if p == 2:
        return count_points_bruteforce(curve, 2)

    # Completing the square: y-solutions at x number 1 + legendre(D(x))
    squares = [False] * p
    for y in range(p):
        squares[y * y % p] = True

    affine = 0
    for x in range(p):
        s = (a1 * x + a3) % p
        d = (s * s + 4 * (((x + a2) * x + a4) * x + a6)) % p
        if d == 0:
            affine += 1
        elif squares[d]:
            affine += 2
    return affine + 1


def count_points_bruteforce(curve: CurveData, p: int) -> int:
    """#E(F_p) by enumerating all (x, y) plus the point at infinity."""
    a1, a2, a3, a4, a6 = (a % p for a in curve.coefficients)
    count = 1
    for x in range(p):
        rhs = (((x + a2) * x + a4) * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                count += 1
    return count


def reduce_mod_p(curve: CurveData, p: int, bound: int = DEFAULT_POINT_COUNT_BOUND) -> ReductionInfo:
    """
    Classify the reduction of curve at p and return a_p.

    Bad reduction is read off the point count: a_p = 1 split multiplicative,
    -1 nonsplit, 0 additive. The kind must match v_p(N).

    Raises:
        ValueError: p is not a prime below the bound
        InconsistentConductor: reduction contradicts the conductor
    """
    if p < 2 or not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p > bound:
        raise ValueError(f"p={p} exceeds the point-count bound {bound}")

    ap = p + 1 - count_points(curve, p)
    v_disc = curve.disc % p == 0
    v_cond = valuation(curve.conductor, p)

    if not v_disc:
        if v_cond:
            raise InconsistentConductor(
                f"{curve.name}: good reduction at {p} but {p} | N={curve.conductor}"
            )
        return ReductionInfo(p, ReductionKind.GOOD, ap)

    if ap == 1:
        kind = ReductionKind.SPLIT_MULTIPLICATIVE
    elif ap == -1:
        kind = ReductionKind.NONSPLIT_MULTIPLICATIVE
    elif ap == 0:
        kind = ReductionKind.ADDITIVE
    else:
        raise InconsistentConductor(f"{curve.name}: bad reduction at {p} with a_p={ap}")

    if kind.is_multiplicative and v_cond != 1:
        raise InconsistentConductor(
            f"{curve.name}: multiplicative at {p} needs v_p(N)=1, got {v_cond}"
        )
    if kind is ReductionKind.ADDITIVE and v_cond < 2:
        raise InconsistentConductor(
            f"{curve.name}: additive at {p} needs v_p(N)>=2, got {v_cond}"
        )
    return ReductionInfo(p, kind, ap)


def bad_reduction(curve: CurveData, bound: int = DEFAULT_POINT_COUNT_BOUND) -> dict[int, ReductionInfo]:
    """Reduction data at every prime dividing N."""
    return {p: reduce_mod_p(curve, p, bound) for p in prime_divisors(curve.conductor)}


def validate_conductor(curve: CurveData, bound: int = DEFAULT_POINT_COUNT_BOUND):
    """
    Check the stated conductor against the model.

    Primes of N are classified by point count; every prime of the
    discriminant must divide N for a minimal model.
    """
    for p in prime_divisors(curve.conductor):
        if p <= bound:
            reduce_mod_p(curve, p, bound)
        elif curve.disc % p:
            raise InconsistentConductor(f"{curve.name}: {p} | N but not the discriminant")
    for p in prime_divisors(curve.disc):
        if curve.conductor % p:
            raise InconsistentConductor(
                f"{curve.name}: {p} divides the discriminant but not N={curve.conductor}"
            )


def root_number_from_reduction(curve: CurveData, bound: int = DEFAULT_POINT_COUNT_BOUND) -> Optional[int]:
    """
    Global root number of a semistable curve from its local factors.

    -1 at infinity, -a_p at each multiplicative prime. None when some
    reduction is additive.
    """
    w = -1
    for info in bad_reduction(curve, bound).values():
        if not info.kind.is_multiplicative:
            return None
        w *= -info.ap
    return w


def hasse_bound_holds(p: int, ap: int) -> bool:
    """|a_p| <= 2 sqrt(p)."""
    return ap * ap <= 4 * p
