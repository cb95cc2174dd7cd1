"""
Special-value check: character values of Theta_M against twisted L-values.

For every primitive character chi of G_M, A_chi = chi(Theta_M) should equal
c * B_chi with one constant c for all chi and all M, where B_chi is
tau(conj chi) L(A, chi, 1) or tau(chi) L(A, conj chi, 1) depending on the
sigma_a convention. Both pairings are tried and the one that holds is
recorded. Extra rows with no character data:

    M = 1:           A = (1/2)[0]_A,          B = L(A, 1)
    M = l prime:     A = aug(Theta_l),        B = (a_l - 2) L(A, 1)
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional

import mpmath

from ..core.arith import isprime
from ..core.constants import SPECIAL_VALUE_TOLERANCE
from ..core.errors import HypothesisViolated
from ..core.logging import debug_log
from ..curve.reduction import reduce_mod_p
from ..curve.weierstrass import CurveData
from ..groupring import characters, evaluate, is_primitive
from ..maninsym import RationalPeriodMap, fricke_eigenvalue
from ..stickelberger import theta, theta_central
from .dirichlet import DirichletCharacter, gauss_sum
from .series import LSeriesContext, l_value_twisted

PAIRINGS = ("tau(conj chi) L(chi)", "tau(chi) L(conj chi)")


@dataclass
class SpecialValueRow:
    """One (M, chi) comparison."""
    modulus: int
    char_id: str
    a_value: complex
    b_values: tuple[complex, complex]
    residual: float = float("nan")

    def b(self, pairing: int) -> complex:
        return self.b_values[pairing]

    def to_dict(self, pairing: int) -> dict:
        return {
            "modulus": self.modulus,
            "char_id": self.char_id,
            "A": [self.a_value.real, self.a_value.imag],
            "B": [self.b(pairing).real, self.b(pairing).imag],
            "residual": self.residual,
        }


@dataclass
class SpecialValueReport:
    """Fitted scalar and per-row residuals."""
    curve: CurveData
    rows: list[SpecialValueRow] = field(default_factory=list)
    c: Optional[complex] = None
    pairing: Optional[int] = None
    fitted_from: Optional[tuple[int, str]] = None
    max_residual: float = 0.0
    c_spread: float = 0.0
    tolerance: float = SPECIAL_VALUE_TOLERANCE

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance

    @property
    def pairing_name(self) -> Optional[str]:
        return PAIRINGS[self.pairing] if self.pairing is not None else None

    def to_dict(self) -> dict:
        pairing = self.pairing or 0
        return {
            "curve": self.curve.name,
            "passed": self.passed,
            "c": [self.c.real, self.c.imag] if self.c is not None else None,
            "pairing": self.pairing_name,
            "fitted_from": list(self.fitted_from) if self.fitted_from else None,
            "max_residual": self.max_residual,
            "c_spread": self.c_spread,
            "rows": [row.to_dict(pairing) for row in self.rows],
        }


def _rows_for_modulus(
    curve: CurveData,
    period_map: RationalPeriodMap,
    M: int,
    ctx: LSeriesContext,
    central_l: complex,
) -> list[SpecialValueRow]:
    th = theta(curve, period_map, M)
    rows = []
    for chi in characters(th.group):
        if not is_primitive(chi):
            continue
        dchi = DirichletCharacter.from_group_character(chi)
        with mpmath.workdps(ctx.digits + 10):
            tau = gauss_sum(dchi)
            tau_bar = gauss_sum(dchi.conjugate())
            b0 = complex(tau_bar * l_value_twisted(ctx, dchi))
            b1 = complex(tau * l_value_twisted(ctx, dchi.conjugate()))
        rows.append(SpecialValueRow(M, chi.label, evaluate(chi, th.element), (b0, b1)))
    if isprime(M):
        factor = reduce_mod_p(curve, M).ap - 2
        b = factor * central_l
        rows.append(SpecialValueRow(M, "trivial", complex(float(th.element.augmentation())), (b, b)))
    return rows


def _fit(rows: list[SpecialValueRow], pairing: int, tolerance: float):
    """(c, source row, max residual, spread) for one pairing."""
    best = max(rows, key=lambda r: abs(r.b(pairing)))
    b_max = abs(best.b(pairing))
    if b_max < tolerance:
        # every B vanishes: the relation says every A vanishes
        residual = max(abs(r.a_value) for r in rows)
        return None, None, residual, 0.0
    c = best.a_value / best.b(pairing)
    residual = max(abs(r.a_value - c * r.b(pairing)) / max(1.0, abs(r.b(pairing))) for r in rows)
    spread = 0.0
    for r in rows:
        if abs(r.b(pairing)) > 0.1 * b_max:
            spread = max(spread, abs(r.a_value / r.b(pairing) - c) / abs(c) if c else 0.0)
    return c, best, residual, spread


def check_special_values(
    curve: CurveData,
    period_map: RationalPeriodMap,
    moduli: Iterable[int],
    ctx: Optional[LSeriesContext] = None,
    include_central: bool = True,
    tolerance: float = SPECIAL_VALUE_TOLERANCE,
) -> SpecialValueReport:
    """
    Fit one scalar c over every tested modulus and report the worst residual.

    Raises:
        HypothesisViolated: some M shares a factor with N
        PrecisionNotReached: from l_value_twisted
    """
    moduli = sorted(set(moduli))
    N = curve.conductor
    for M in moduli:
        if gcd(M, N) != 1:
            raise HypothesisViolated(f"gcd(M={M}, N={N}) > 1")
    if ctx is None:
        ctx = LSeriesContext(curve, root_number=-fricke_eigenvalue(period_map))

    central_l = complex(l_value_twisted(ctx, DirichletCharacter.trivial()))
    rows: list[SpecialValueRow] = []
    if include_central:
        a = complex(float(theta_central(period_map)))
        rows.append(SpecialValueRow(1, "trivial", a, (central_l, central_l)))
    for M in moduli:
        if M >= 3:
            rows.extend(_rows_for_modulus(curve, period_map, M, ctx, central_l))

    report = SpecialValueReport(curve, rows, tolerance=tolerance)
    if not rows:
        return report

    fits = [_fit(rows, p, tolerance) for p in range(len(PAIRINGS))]
    pairing = min(range(len(PAIRINGS)), key=lambda p: fits[p][2])
    c, source, residual, spread = fits[pairing]
    for r in rows:
        r.residual = (
            abs(r.a_value - c * r.b(pairing)) / max(1.0, abs(r.b(pairing))) if c is not None else abs(r.a_value)
        )
    report.c = c
    report.pairing = pairing
    report.fitted_from = (source.modulus, source.char_id) if source else None
    report.max_residual = residual
    report.c_spread = spread
    debug_log(
        f"special values {curve.name}: {len(rows)} rows, pairing {PAIRINGS[pairing]}, "
        f"max residual {residual:.3g}"
    )
    return report
