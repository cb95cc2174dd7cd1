"""
Relation checks for Mazur-Tate elements.

Hard checks (norm relations, functional equation, parity, the |S_M|
vanishing bound) must hold for a correct engine; the full Mazur-Tate
inequality with positive rank is advisory.

For a prime l the relations used are, with pi the projection and nu the
corestriction:

    l !| M, l !| N:  pi(Theta_{Ml}) = (a_l - sigma_l - sigma_l^-1) Theta_M
    l !| M, l | N:   pi(Theta_{Ml}) = (a_l - sigma_l^e) Theta_M
    l | M,  l !| N:  pi(Theta_{Ml}) = a_l Theta_M - nu(Theta_{M/l})
    l | M,  l | N:   pi(Theta_{Ml}) = a_l Theta_M
"""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Optional

import numpy as np

from ..core.arith import isprime
from ..core.constants import CHARACTER_TOLERANCE, DEFAULT_POINT_COUNT_BOUND, DEFAULT_R_MAX
from ..core.errors import HypothesisViolated
from ..curve.reduction import reduce_mod_p
from ..curve.weierstrass import CurveData
from ..groupring import (
    INTEGERS,
    Z_HALF,
    CoefficientRing,
    GroupRingElement,
    characters,
    corestriction,
    evaluate,
    fourier_inverse,
    galois_group,
    in_power,
    involution,
    project,
    sigma,
)
from ..maninsym import RationalPeriodMap, fricke_eigenvalue
from .orientation import ORIENTATIONS, OrientationRegistry
from .theta import ThetaElement, theta, theta_scalar


class Verdict(Enum):
    """Outcome of one relation check."""
    EXACT = "exact-equal"
    SIGN_VARIANT = "sign-variant-equal"
    FAILED = "failed"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class RelationReport:
    """Both sides of a checked identity and how it came out."""
    name: str
    verdict: Verdict
    left: Optional[GroupRingElement] = None
    right: Optional[GroupRingElement] = None
    orientation: Optional[int] = None
    hard: bool = True
    detail: str = ""
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAILED

    @property
    def hard_failure(self) -> bool:
        return self.hard and self.verdict is Verdict.FAILED

    def to_dict(self) -> dict:
        return {
            "relation": self.name,
            "verdict": self.verdict.value,
            "hard": self.hard,
            "orientation": self.orientation,
            "left": self.left.dump() if self.left is not None else None,
            "right": self.right.dump() if self.right is not None else None,
            "detail": self.detail,
            "params": dict(self.params),
        }


def _compare(name: str, left: GroupRingElement, right: GroupRingElement, **params) -> RelationReport:
    verdict = Verdict.EXACT if left == right else Verdict.FAILED
    return RelationReport(name, verdict, left, right, params=params)


def _oriented(
    name: str,
    left: GroupRingElement,
    candidates: dict[int, GroupRingElement],
    default: int,
    registry: OrientationRegistry,
    case: str,
    **params,
) -> RelationReport:
    holds = {o: left == right for o, right in candidates.items()}
    if all(holds.values()):
        pin = registry.pinned(name)
        orientation = pin.orientation if pin else default
        return RelationReport(
            name, Verdict.EXACT, left, candidates[orientation], orientation,
            detail="every orientation holds", params=params,
        )
    chosen = registry.resolve(name, holds, case)
    if chosen is None:
        return RelationReport(
            name, Verdict.FAILED, left, candidates[default], None,
            detail="no orientation holds", params=params,
        )
    if not holds[chosen]:
        other = [o for o, ok in holds.items() if ok]
        detail = f"pinned orientation {chosen:+d} fails" + (f"; {other[0]:+d} holds" if other else "")
        return RelationReport(name, Verdict.FAILED, left, candidates[chosen], chosen, detail=detail, params=params)
    verdict = Verdict.EXACT if chosen == default else Verdict.SIGN_VARIANT
    return RelationReport(name, verdict, left, candidates[chosen], chosen, params=params)


def _ap(curve: CurveData, ell: int, bound: int) -> int:
    return reduce_mod_p(curve, ell, bound).ap


def _require_prime(ell: int):
    if not isprime(ell):
        raise HypothesisViolated(f"{ell} is not prime")


# -- vanishing ------------------------------------------------------------------


def check_vanishing_bound(th: ThetaElement) -> RelationReport:
    """ord_Z(Theta_M) >= |S_M|."""
    bound = th.s_m_size
    holds = in_power(th.element, bound, INTEGERS)
    return RelationReport(
        "vanishing-bound",
        Verdict.EXACT if holds else Verdict.FAILED,
        left=th.element,
        detail=f"Theta in I^{bound}" if holds else f"Theta not in I^{bound}",
        params={"modulus": th.modulus, "s_m": sorted(th.s_m), "bound": bound},
    )


def check_mazur_tate(th: ThetaElement, rank: Optional[int]) -> RelationReport:
    """ord_Z(Theta_M) >= rank + |S_M|; advisory."""
    params = {"modulus": th.modulus, "rank": rank, "s_m": sorted(th.s_m)}
    if rank is None:
        return RelationReport(
            "mazur-tate", Verdict.NOT_APPLICABLE, left=th.element, hard=False,
            detail="rank unknown", params=params,
        )
    bound = rank + th.s_m_size
    holds = in_power(th.element, bound, INTEGERS)
    params["bound"] = bound
    return RelationReport(
        "mazur-tate",
        Verdict.EXACT if holds else Verdict.FAILED,
        left=th.element,
        hard=False,
        detail=f"Theta {'in' if holds else 'not in'} I^{bound}",
        params=params,
    )


# -- norm relations -----------------------------------------------------------------


def check_norm_coprime(
    curve: CurveData,
    period_map: RationalPeriodMap,
    M: int,
    ell: int,
    registry: OrientationRegistry = None,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> RelationReport:
    """
    pi(Theta_{Ml}) against Theta_M for a prime l not dividing M.

    Raises:
        HypothesisViolated: l | M or l not prime
        ModulusTooSmall: M < 3
    """
    _require_prime(ell)
    if M % ell == 0:
        raise HypothesisViolated(f"{ell} divides {M}")
    registry = registry or ORIENTATIONS
    G, H = galois_group(M * ell), galois_group(M)
    left = project(G, H, theta(curve, period_map, M * ell, bound).element)
    base = theta(curve, period_map, M, bound).element
    ap = _ap(curve, ell, bound)
    s = sigma(H, ell)
    s_inv = sigma(H, pow(ell, -1, M))
    params = {"modulus": M, "prime": ell, "ap": ap}

    if curve.conductor % ell:
        return _compare("norm-coprime", left, (ap - s - s_inv) * base, **params)
    candidates = {1: (ap - s) * base, -1: (ap - s_inv) * base}
    return _oriented(
        "norm-coprime-bad", left, candidates, 1, registry,
        f"{curve.name} M={M} l={ell}", **params,
    )


def check_norm_dividing(
    curve: CurveData,
    period_map: RationalPeriodMap,
    M: int,
    ell: int,
    r: int = 1,
    registry: OrientationRegistry = None,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> RelationReport:
    """
    Three-term relation at layer r >= 1, everything projected to G_M:

        pi(Theta_{M l^{r+1}}) = a_l pi(Theta_{M l^r}) - [U^(r-1) : U^(r)] pi(Theta_{M l^{r-1}})

    with index l - 1 at r = 1 and l for r >= 2.

    Raises:
        HypothesisViolated: l | M, l | N, r < 1 or l not prime
    """
    _require_prime(ell)
    if M % ell == 0:
        raise HypothesisViolated(f"{ell} divides {M}")
    if curve.conductor % ell == 0:
        raise HypothesisViolated(f"{ell} divides the conductor; use check_norm_bad")
    if r < 1:
        raise HypothesisViolated(f"layer must be >= 1, got {r}")
    registry = registry or ORIENTATIONS
    H = galois_group(M)

    def projected(k: int) -> GroupRingElement:
        th = theta(curve, period_map, M * ell**k, bound).element
        return th if k == 0 else project(galois_group(M * ell**k), H, th)

    ap = _ap(curve, ell, bound)
    index = ell - 1 if r == 1 else ell
    left = projected(r + 1)
    middle = ap * projected(r)
    lower = index * projected(r - 1)
    candidates = {-1: middle - lower, 1: middle + lower}
    return _oriented(
        "norm-dividing", left, candidates, -1, registry,
        f"{curve.name} M={M} l={ell} r={r}",
        modulus=M, prime=ell, layer=r, ap=ap, index=index,
    )


def check_norm_layer(
    curve: CurveData,
    period_map: RationalPeriodMap,
    M: int,
    ell: int,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> RelationReport:
    """
    pi(Theta_{Ml}) = a_l Theta_M - nu(Theta_{M/l}) for l | M, l !| N.

    For M/l < 3 the lower term is the constant [1/(M/l)] on every sigma.
    """
    _require_prime(ell)
    if M % ell:
        raise HypothesisViolated(f"{ell} does not divide {M}")
    if curve.conductor % ell == 0:
        raise HypothesisViolated(f"{ell} divides the conductor; use check_norm_bad")
    G, H = galois_group(M * ell), galois_group(M)
    left = project(G, H, theta(curve, period_map, M * ell, bound).element)
    ap = _ap(curve, ell, bound)
    lower_modulus = M // ell
    if lower_modulus >= 3:
        lower = corestriction(
            galois_group(lower_modulus), H, theta(curve, period_map, lower_modulus, bound).element
        )
    else:
        lower = GroupRingElement(H, [theta_scalar(period_map, lower_modulus)] * H.order)
    right = ap * theta(curve, period_map, M, bound).element - lower
    return _compare("norm-layer", left, right, modulus=M, prime=ell, ap=ap)


def check_norm_bad(
    curve: CurveData,
    period_map: RationalPeriodMap,
    M: int,
    ell: int,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> RelationReport:
    """pi(Theta_{Ml}) = a_l Theta_M for l dividing both M and N."""
    _require_prime(ell)
    if M % ell or curve.conductor % ell:
        raise HypothesisViolated(f"{ell} must divide both M={M} and N={curve.conductor}")
    G, H = galois_group(M * ell), galois_group(M)
    left = project(G, H, theta(curve, period_map, M * ell, bound).element)
    ap = _ap(curve, ell, bound)
    right = ap * theta(curve, period_map, M, bound).element
    return _compare("norm-bad", left, right, modulus=M, prime=ell, ap=ap)


# -- functional equation and parity ---------------------------------------------------------


def check_functional_equation(
    th: ThetaElement,
    eps: int,
    registry: OrientationRegistry = None,
) -> RelationReport:
    """
    Theta^v = -eps_N sigma_N^e Theta with e pinned once.

    Raises:
        HypothesisViolated: gcd(M, N) > 1
    """
    N, M = th.curve.conductor, th.modulus
    if gcd(M, N) != 1:
        raise HypothesisViolated(f"gcd(M={M}, N={N}) > 1")
    if eps not in (1, -1):
        raise ValueError(f"Fricke sign must be +-1, got {eps}")
    registry = registry or ORIENTATIONS
    G = th.group
    left = involution(th.element)
    candidates = {
        1: (-eps) * sigma(G, N) * th.element,
        -1: (-eps) * sigma(G, pow(N, -1, M)) * th.element,
    }
    return _oriented(
        "functional-equation", left, candidates, 1, registry,
        f"{th.curve.name} M={M}", modulus=M, eps=eps,
    )


def check_parity(
    th: ThetaElement,
    eps: int,
    ring: CoefficientRing = Z_HALF,
    r_max: int = DEFAULT_R_MAX,
) -> RelationReport:
    """
    (-1)^ord_R(Theta) = -eps_N whenever ord is finite and gcd(M, N) = 1;
    R should invert 2. Moduli sharing a factor with N are not applicable.
    """
    g = gcd(th.modulus, th.curve.conductor)
    if g != 1:
        return RelationReport(
            "parity", Verdict.NOT_APPLICABLE, left=th.element,
            detail=f"gcd(M, N) = {g}",
            params={"modulus": th.modulus, "eps": eps, "ring": ring.name},
        )
    result = th.ord(r_max, ring)
    params = {"modulus": th.modulus, "eps": eps, "ring": ring.name, "ord": str(result)}
    if not result.is_finite:
        return RelationReport(
            "parity", Verdict.NOT_APPLICABLE, left=th.element,
            detail=f"ord is {result}", params=params,
        )
    holds = (-1) ** result.value == -eps
    return RelationReport(
        "parity",
        Verdict.EXACT if holds else Verdict.FAILED,
        left=th.element,
        detail=f"(-1)^{result.value} {'=' if holds else '!='} {-eps}",
        params=params,
    )


def check_character_determination(th: ThetaElement) -> RelationReport:
    """Theta is recovered from its character values (all characters of G_M are even)."""
    G = th.group
    chars = characters(G)
    values = {chi.index: evaluate(chi, th.element) for chi in chars}
    recovered = fourier_inverse(G, values)
    coeffs = np.array([float(c) for c in th.element.coeffs])
    scale = max(1.0, float(np.max(np.abs(coeffs)))) if len(coeffs) else 1.0
    error = float(np.max(np.abs(recovered - coeffs))) if len(coeffs) else 0.0
    right = GroupRingElement(G, [int(round(x.real)) for x in recovered])
    ok = error <= CHARACTER_TOLERANCE * scale and all(chi.is_even for chi in chars)
    vanishing = sum(1 for v in values.values() if abs(v) <= CHARACTER_TOLERANCE * scale)
    return RelationReport(
        "character-determination",
        Verdict.EXACT if ok else Verdict.FAILED,
        th.element,
        right,
        detail=f"max error {error:.3g}; {vanishing}/{len(chars)} characters vanish",
        params={"modulus": th.modulus},
    )


# -- pinning --------------------------------------------------------------------------


def pin_default_orientations(
    period_map: RationalPeriodMap,
    registry: OrientationRegistry = None,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> list[RelationReport]:
    """
    Pin every oriented relation on small cases of one curve (11a1 in practice):
    bad-prime coprime relation at M=7, l=11; dividing relation at M=5, l=3;
    functional equation at M=7.
    """
    registry = registry or ORIENTATIONS
    curve = period_map.curve
    N = curve.conductor
    reports = [
        check_norm_coprime(curve, period_map, 7, N, registry, bound),
        check_norm_dividing(curve, period_map, 5, 3, 1, registry, bound),
        check_functional_equation(theta(curve, period_map, 7, bound), fricke_eigenvalue(period_map), registry),
    ]
    return reports
