"""
Fourier coefficients a_p and a_n of an elliptic curve.

a_p tables are cached on disk as text:

    STICKEL-AP v1
    curve <label> <a1,a2,a3,a4,a6> <N>
    p_max <bound>
    <p> <a_p>
    ...

Files are written atomically so concurrent readers never see a partial
table; writers for the same (curve, p_max) are serialised in-process.
"""

import threading
from pathlib import Path
from typing import Optional

from ..core.arith import primes_up_to
from ..core.constants import AP_CACHE_MAGIC, DEFAULT_POINT_COUNT_BOUND
from ..core.logging import debug_log
from ..core.paths import atomic_write_text, get_cache_dir
from .reduction import reduce_mod_p
from .weierstrass import CurveData

_key_locks: dict[str, threading.Lock] = {}
_key_locks_guard = threading.Lock()

# In-process copy of tables already read or computed
_memory: dict[tuple[str, int], dict[int, int]] = {}


def _lock_for(key: str) -> threading.Lock:
    with _key_locks_guard:
        lock = _key_locks.get(key)
        if lock is None:
            lock = _key_locks[key] = threading.Lock()
        return lock


def _curve_line(curve: CurveData) -> str:
    coeffs = ",".join(str(a) for a in curve.coefficients)
    return f"curve {curve.label or '-'} {coeffs} {curve.conductor}"


def ap_cache_path(curve: CurveData, p_max: int, cache_dir: Optional[Path] = None) -> Path:
    """Cache file for (curve, p_max)."""
    base = cache_dir if cache_dir is not None else get_cache_dir()
    return base / f"ap_{curve.cache_key}_{p_max}.txt"


def write_ap_cache(path: Path, curve: CurveData, p_max: int, table: dict[int, int]):
    """Serialise an a_p table in the versioned text format."""
    lines = [AP_CACHE_MAGIC, _curve_line(curve), f"p_max {p_max}"]
    lines.extend(f"{p} {ap}" for p, ap in sorted(table.items()))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_ap_cache(path: Path, curve: CurveData, p_max: int) -> Optional[dict[int, int]]:
    """Load a cached table, or None if missing, stale or malformed."""
    if not path.exists():
        return None
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError:
        return None
    if len(lines) < 3 or lines[0] != AP_CACHE_MAGIC:
        return None
    if lines[1] != _curve_line(curve) or lines[2] != f"p_max {p_max}":
        return None
    table = {}
    try:
        for line in lines[3:]:
            if line.strip():
                p, ap = line.split()
                table[int(p)] = int(ap)
    except ValueError:
        return None
    if sorted(table) != primes_up_to(p_max):
        return None
    return table


def ap_table(
    curve: CurveData,
    p_max: int,
    bound: int = DEFAULT_POINT_COUNT_BOUND,
    cache_dir: Optional[Path] = None,
    use_cache: bool = True,
) -> dict[int, int]:
    """
    Return {p: a_p} for every prime p <= p_max.

    Raises:
        ValueError: p_max < 2
        InconsistentConductor: from reduce_mod_p
    """
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")

    mem_key = (curve.cache_key + _curve_line(curve), p_max)
    if mem_key in _memory:
        return dict(_memory[mem_key])

    with _lock_for(f"{curve.cache_key}:{p_max}"):
        if mem_key in _memory:
            return dict(_memory[mem_key])

        path = ap_cache_path(curve, p_max, cache_dir) if use_cache else None
        table = read_ap_cache(path, curve, p_max) if path else None
        if table is not None:
            debug_log(f"ap cache hit: {path.name}")
        else:
            table = {p: reduce_mod_p(curve, p, bound).ap for p in primes_up_to(p_max)}
            if path:
                write_ap_cache(path, curve, p_max, table)
                debug_log(f"ap cache written: {path.name} ({len(table)} primes)")
        _memory[mem_key] = table
        return dict(table)


def clear_memory_cache():
    """Forget in-process tables (disk caches are untouched)."""
    _memory.clear()


def an_table(
    curve: CurveData,
    n_max: int,
    ap: Optional[dict[int, int]] = None,
    **ap_kwargs,
) -> list[int]:
    """
    Return [0, a_1, ..., a_{n_max}] (index 0 unused).

    Uses a smallest-prime-factor sieve: writing n = p*m with p the smallest
    prime of n, a_n = a_p a_m when p does not divide m, otherwise
    a_p a_m - p a_{m/p} for good p and a_p a_m for bad p.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if ap is None:
        ap = ap_table(curve, max(n_max, 2), **ap_kwargs)

    spf = list(range(n_max + 1))
    for i in range(2, int(n_max**0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n_max + 1, i):
                if spf[j] == j:
                    spf[j] = i

    N = curve.conductor
    a = [0] * (n_max + 1)
    a[1] = 1
    for n in range(2, n_max + 1):
        p = spf[n]
        m = n // p
        if m % p:
            a[n] = ap[p] * a[m]
        elif N % p:
            a[n] = ap[p] * a[m] - p * a[m // p]
        else:
            a[n] = ap[p] * a[m]
    return a
