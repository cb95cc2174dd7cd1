"""
Twisted central L-values L(A, chi, 1) by the approximate functional equation.

For chi primitive mod m with gcd(m, N) = 1 the twist has level Q = N m^2
and root number w_chi = w chi(N) tau(chi)^2 / m. For any split A > 0

    L(A, chi, 1) = sum chi(n) a_n / n exp(-2 pi n A / sqrt(Q))
                 + w_chi sum conj(chi)(n) a_n / n exp(-2 pi n / (A sqrt(Q)))

Tail bound: with |a_n| <= d(n) sqrt(n) the n-th term of either sum is at
most d(n) n^(-1/2) exp(-2 pi n / (A m sqrt(N))). Taking
n_max = ceil(kappa * m * sqrt(N) * digits) with kappa = 0.75 and A <= 6/5
makes the exponent at the cut at least 3.9 * digits, so the tail is below
10^-(digits + 1) for every digits >= 4. Each value is computed at two
splits and two truncations; disagreement raises PrecisionNotReached.
"""

import threading
from math import ceil, gcd, sqrt
from pathlib import Path
from typing import Optional

import mpmath

from ..core.constants import (
    DEFAULT_DIGITS,
    DEFAULT_POINT_COUNT_BOUND,
    GUARD_DIGITS,
    SPLIT_POINT,
    TRUNCATION_KAPPA,
)
from ..core.errors import HypothesisViolated, NotPrimitive, PrecisionNotReached
from ..core.logging import debug_log
from ..curve.coefficients import an_table
from ..curve.reduction import root_number_from_reduction
from ..curve.weierstrass import CurveData
from .dirichlet import DirichletCharacter, gauss_sum


def truncation_length(m: int, N: int, digits: int = DEFAULT_DIGITS) -> int:
    """Terms needed for a twist of conductor m at the given precision."""
    return max(10, ceil(TRUNCATION_KAPPA * m * sqrt(N) * digits))


class LSeriesContext:
    """a_n table and root number of one curve, extended on demand."""

    def __init__(
        self,
        curve: CurveData,
        digits: int = DEFAULT_DIGITS,
        root_number: Optional[int] = None,
        point_bound: int = DEFAULT_POINT_COUNT_BOUND,
        cache_dir: Optional[Path] = None,
        use_cache: bool = True,
    ):
        if digits < 1:
            raise ValueError(f"digits must be >= 1, got {digits}")
        if root_number is None:
            root_number = root_number_from_reduction(curve, point_bound)
            if root_number is None:
                raise ValueError(f"{curve.name} is not semistable; pass the root number explicitly")
        if root_number not in (1, -1):
            raise ValueError(f"root number must be +-1, got {root_number}")
        self.curve = curve
        self.digits = digits
        self.root_number = root_number
        self._ap_kwargs = {"bound": point_bound, "cache_dir": cache_dir, "use_cache": use_cache}
        self._an: list[int] = [0, 1]
        self._lock = threading.Lock()

    @property
    def n_max(self) -> int:
        return len(self._an) - 1

    def coefficients(self, n: int) -> list[int]:
        """[0, a_1, ..., a_n], growing the shared table if needed."""
        with self._lock:
            if n > self.n_max:
                self._an = an_table(self.curve, n, **self._ap_kwargs)
                debug_log(f"a_n table for {self.curve.name} extended to {n}")
            return self._an

    def twisted_root_number(self, chi: DirichletCharacter):
        tau = gauss_sum(chi)
        return self.root_number * chi(self.curve.conductor) * tau * tau / chi.modulus


def _series(ctx: LSeriesContext, chi: DirichletCharacter, n_max: int, split, w_chi):
    an = ctx.coefficients(n_max)
    m = chi.modulus
    sqrt_q = mpmath.sqrt(ctx.curve.conductor) * m
    first = mpmath.exp(-2 * mpmath.pi * split / sqrt_q)
    second = mpmath.exp(-2 * mpmath.pi / (split * sqrt_q))

    values = {r: chi(r) for r, _ in chi.angles}
    direct = mpmath.mpc(0)
    dual = mpmath.mpc(0)
    x, y = mpmath.mpf(1), mpmath.mpf(1)
    for n in range(1, n_max + 1):
        x *= first
        y *= second
        if not an[n]:
            continue
        c = values.get(n % m)
        if c is None:
            continue
        term = mpmath.mpf(an[n]) / n
        direct += c * term * x
        dual += mpmath.conj(c) * term * y
    return direct + w_chi * dual


def l_value_twisted(ctx: LSeriesContext, chi: DirichletCharacter):
    """
    L(A, chi, 1) for chi primitive with gcd(m, N) = 1.

    Raises:
        NotPrimitive: chi is imprimitive
        HypothesisViolated: gcd(m, N) > 1
        PrecisionNotReached: splits or truncations disagree beyond 10^-digits
    """
    if not chi.is_primitive():
        raise NotPrimitive(f"character mod {chi.modulus} has conductor {chi.conductor()}")
    m, N = chi.modulus, ctx.curve.conductor
    if gcd(m, N) != 1:
        raise HypothesisViolated(f"gcd(m={m}, N={N}) > 1")

    n_max = truncation_length(m, N, ctx.digits)
    with mpmath.workdps(ctx.digits + GUARD_DIGITS):
        w_chi = ctx.twisted_root_number(chi)
        base = _series(ctx, chi, n_max, mpmath.mpf(1), w_chi)
        split = mpmath.mpf(SPLIT_POINT[0]) / SPLIT_POINT[1]
        moved = _series(ctx, chi, n_max, split, w_chi)
        longer = _series(ctx, chi, 2 * n_max, mpmath.mpf(1), w_chi)

        tol = mpmath.mpf(10) ** (-ctx.digits) * max(1, abs(base))
        if abs(base - moved) > tol:
            raise PrecisionNotReached(
                f"L({ctx.curve.name}, {chi.label or 'chi'} mod {m}, 1): split points disagree by "
                f"{mpmath.nstr(abs(base - moved), 3)} (root number or a_n wrong?)"
            )
        if abs(base - longer) > tol:
            raise PrecisionNotReached(
                f"L({ctx.curve.name}, {chi.label or 'chi'} mod {m}, 1): truncations {n_max} and "
                f"{2 * n_max} disagree by {mpmath.nstr(abs(base - longer), 3)}"
            )
        return +longer
