"""
The rational period map q -> [q]_A of an elliptic curve.

cut_eigenspace intersects the kernels of (T_p^T - a_p) on the dual of the
plus quotient over good primes in increasing order until a line remains,
then scales the functional so its values on all Manin generators are
coprime integers with the first nonzero value positive.

Cut maps can be cached on disk in a diffable text form:

    STICKEL-PHI v1
    curve <label> <a1,a2,a3,a4,a6> <N>
    primes <p,p,...>
    dual <x,x,...>
    index;c;d;value
    0;0;1;<value>
    ...
"""

import hashlib
import threading
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Optional

from ..core.arith import primes_up_to
from ..core.constants import DEFAULT_EIGEN_PRIME_BOUND, DEFAULT_POINT_COUNT_BOUND, PERIOD_MAP_MAGIC
from ..core.errors import (
    EigenspaceEmpty,
    EigenspaceNotRankOne,
    InconsistentInput,
    NotEigenvector,
)
from ..core.logging import debug_log
from ..core.paths import atomic_write_text, get_cache_dir
from ..curve.reduction import reduce_mod_p
from ..curve.weierstrass import CurveData
from . import linalg
from .heilbronn import act, hecke_rows, merel
from .p1 import P1List
from .paths import Cusp, fricke_image, path_from_infinity
from .space import ModularSymbolSpace, build_space

NORMALIZATION_ID = "gcd1-first-positive"

_map_locks: dict[str, threading.Lock] = {}
_map_locks_guard = threading.Lock()


@dataclass(frozen=True)
class RationalPeriodMap:
    """Integer-valued plus functional on the Manin symbols of one curve."""
    curve: CurveData
    level: int
    values: tuple[int, ...]
    dual: tuple[Fraction, ...]
    primes_used: tuple[int, ...]
    normalization_id: str = NORMALIZATION_ID
    p1: P1List = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.p1 is None:
            object.__setattr__(self, "p1", P1List(self.level))

    def value_on(self, c: int, d: int) -> int:
        return self.values[self.p1.index(c, d)]

    @property
    def fingerprint(self) -> str:
        text = ",".join(str(v) for v in self.values)
        return hashlib.sha1(text.encode()).hexdigest()[:12]

    def scaled(self, factor: Fraction) -> "RationalPeriodMap":
        """Same line, functional multiplied by a nonzero rational (values stay rational)."""
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("scale factor must be nonzero")
        return replace(
            self,
            values=tuple(factor * v for v in self.values),
            dual=tuple(factor * x for x in self.dual),
            normalization_id=f"{self.normalization_id}*{factor}",
        )


def _normalize(values: list[Fraction]) -> Fraction:
    """Factor making values coprime integers with the first nonzero one positive."""
    nonzero = [v for v in values if v]
    if not nonzero:
        raise EigenspaceEmpty("period map vanishes on every generator")
    denom = lcm(*(v.denominator for v in nonzero))
    content = 0
    for v in nonzero:
        content = gcd(content, int(v * denom))
    factor = Fraction(denom, content)
    if nonzero[0] < 0:
        factor = -factor
    return factor


def cut_eigenspace(
    space: ModularSymbolSpace,
    curve: CurveData,
    prime_bound: int = DEFAULT_EIGEN_PRIME_BOUND,
    point_bound: int = DEFAULT_POINT_COUNT_BOUND,
) -> RationalPeriodMap:
    """
    Cut the plus-dual eigenline of curve out of space.

    Raises:
        InconsistentInput: curve.conductor != space.level
        EigenspaceEmpty: the intersection of kernels is zero
        EigenspaceNotRankOne: still more than a line after all primes <= prime_bound
    """
    N = space.level
    if curve.conductor != N:
        raise InconsistentInput(f"curve {curve.name} has conductor {curve.conductor}, space has level {N}")

    plus = space.plus
    candidates = linalg.identity(plus.dimension)
    used = []
    for p in primes_up_to(prime_bound):
        # at least one cut so an Eisenstein-only space is rejected
        if not candidates or (len(candidates) == 1 and used):
            break
        if N % p == 0:
            continue
        ap = reduce_mod_p(curve, p, point_bound).ap
        T = hecke_rows(space, p, sign=1)
        shifted = [[T[i][j] - (ap if i == j else 0) for j in range(len(T))] for i in range(len(T))]
        image = linalg.mat_mul(candidates, shifted)
        kernel = linalg.nullspace(linalg.transpose(image), len(candidates))
        candidates = linalg.mat_mul(kernel, candidates) if kernel else []
        used.append(p)
        debug_log(f"eigen cut N={N} p={p} a_p={ap}: dim {len(candidates)}")
    if not candidates:
        raise EigenspaceEmpty(f"no plus eigenvector for {curve.name} at level {N}")
    if len(candidates) > 1:
        raise EigenspaceNotRankOne(
            f"eigenspace for {curve.name} still has dimension {len(candidates)} after primes <= {prime_bound}"
        )

    dual = candidates[0]
    raw = [sum((dual[k] * v for k, v in plus.coords[i].items()), Fraction(0)) for i in range(len(space.p1))]
    factor = _normalize(raw)
    values = tuple(int(v * factor) for v in raw)
    return RationalPeriodMap(
        curve=curve,
        level=N,
        values=values,
        dual=tuple(x * factor for x in dual),
        primes_used=tuple(used),
        p1=space.p1,
    )


def symbol_value(period_map: RationalPeriodMap, q: Cusp):
    """[q]_A: the period map on the path {inf, q}. Depends on q mod 1 only."""
    if q is None:
        return 0
    q = Fraction(q)
    q -= q.numerator // q.denominator
    return sum(
        (period_map.value_on(c, d) for c, d in path_from_infinity(q)),
        start=0,
    )


def hecke_eigenvalue(period_map: RationalPeriodMap, p: int) -> Fraction:
    """
    Eigenvalue of T_p on the cut line, checked on every generator.

    Raises:
        NotEigenvector: the ratio differs between generators
    """
    p1 = period_map.p1
    ratio = None
    for i, pair in enumerate(p1):
        image = sum(
            (period_map.values[j] for j in (p1.try_index(*act(pair, m)) for m in merel(p)) if j >= 0),
            start=0,
        )
        value = period_map.values[i]
        if value:
            r = Fraction(image) / value
            if ratio is None:
                ratio = r
            elif r != ratio:
                raise NotEigenvector(f"T_{p} ratio {r} != {ratio} at generator {i}")
        elif image:
            raise NotEigenvector(f"T_{p} image nonzero on a generator where the map vanishes")
    return ratio if ratio is not None else Fraction(0)


def fricke_eigenvalue(period_map: RationalPeriodMap) -> int:
    """
    Sign eps_N with phi(W_N x) = eps_N phi(x) for every generator x.

    Raises:
        NotEigenvector: the line is not W_N-stable
    """
    space = build_space(period_map.level)
    eps = None
    for i in range(len(space.p1)):
        image = sum((coef * period_map.values[j] for coef, j in fricke_image(space, i)), start=0)
        value = period_map.values[i]
        if value == 0:
            if image:
                raise NotEigenvector(f"W_N image nonzero where the map vanishes (generator {i})")
            continue
        r = Fraction(image, value)
        if r not in (1, -1) or (eps is not None and r != eps):
            raise NotEigenvector(f"W_N ratio {r} at generator {i}")
        eps = r
    if eps is None:
        raise NotEigenvector("period map is identically zero")
    return int(eps)


def dump_period_map(period_map: RationalPeriodMap) -> str:
    """Versioned text form: header lines then index;c;d;value."""
    curve = period_map.curve
    coeffs = ",".join(str(a) for a in curve.coefficients)
    lines = [
        PERIOD_MAP_MAGIC,
        f"curve {curve.label or '-'} {coeffs} {curve.conductor}",
        "primes " + ",".join(str(p) for p in period_map.primes_used),
        "dual " + ",".join(str(x) for x in period_map.dual),
        "index;c;d;value",
    ]
    for i, (c, d) in enumerate(period_map.p1):
        lines.append(f"{i};{c};{d};{period_map.values[i]}")
    return "\n".join(lines) + "\n"


def load_period_map(text: str, curve: CurveData) -> Optional[RationalPeriodMap]:
    """Parse dump_period_map output for curve; None if stale or malformed."""
    lines = text.splitlines()
    coeffs = ",".join(str(a) for a in curve.coefficients)
    if len(lines) < 5 or lines[0] != PERIOD_MAP_MAGIC:
        return None
    if lines[1] != f"curve {curve.label or '-'} {coeffs} {curve.conductor}":
        return None
    try:
        primes_text = lines[2].removeprefix("primes ").strip()
        primes = tuple(int(p) for p in primes_text.split(",")) if primes_text else ()
        dual = tuple(Fraction(x) for x in lines[3].removeprefix("dual ").split(",") if x)
        p1 = P1List(curve.conductor)
        values = []
        for i, line in enumerate(lines[5:]):
            if not line.strip():
                continue
            index, c, d, value = (int(x) for x in line.split(";"))
            if index != i or p1[i] != (c, d):
                return None
            values.append(value)
    except (ValueError, IndexError):
        return None
    if len(values) != len(p1):
        return None
    return RationalPeriodMap(curve, curve.conductor, tuple(values), dual, primes, p1=p1)


def period_map_path(curve: CurveData, cache_dir: Optional[Path] = None) -> Path:
    base = cache_dir if cache_dir is not None else get_cache_dir()
    return base / f"phi_{curve.cache_key}_{curve.conductor}.txt"


def _map_lock_for(curve: CurveData, path: Optional[Path]) -> threading.Lock:
    """One lock per cache file (or per curve when uncached)."""
    key = str(path) if path is not None else f"{curve.cache_key}:{curve.conductor}"
    with _map_locks_guard:
        lock = _map_locks.get(key)
        if lock is None:
            lock = _map_locks[key] = threading.Lock()
        return lock


def period_map_for(
    curve: CurveData,
    prime_bound: int = DEFAULT_EIGEN_PRIME_BOUND,
    point_bound: int = DEFAULT_POINT_COUNT_BOUND,
    cache_dir: Optional[Path] = None,
    use_cache: bool = True,
) -> RationalPeriodMap:
    """Build (or load from cache) the normalized period map of curve."""
    path = period_map_path(curve, cache_dir) if use_cache else None
    with _map_lock_for(curve, path):
        if path is not None and path.exists():
            try:
                cached = load_period_map(path.read_text(encoding="utf-8"), curve)
            except OSError:
                cached = None
            if cached is not None:
                debug_log(f"period map cache hit: {path.name}")
                return cached
        period_map = cut_eigenspace(build_space(curve.conductor), curve, prime_bound, point_bound)
        if path is not None:
            atomic_write_text(path, dump_period_map(period_map))
            debug_log(f"period map cache written: {path.name}")
        return period_map
