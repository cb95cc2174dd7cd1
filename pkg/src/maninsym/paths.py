"""
Paths between cusps written as sums of Manin symbols.

Cusps are Fractions, with None for infinity. {inf, a/b} is expanded along
the continued-fraction convergents p_j/q_j of a/b:

    {inf, a/b} = sum_{j=0..n} ((-1)^(j-1) q_j : q_(j-1)),  q_(-1) = 0

and {alpha, beta} = {inf, beta} - {inf, alpha}.
"""

from fractions import Fraction
from typing import Optional

from ..core.arith import xgcd
from . import linalg
from .space import ModularSymbolSpace

Cusp = Optional[Fraction]


def convergents(q: Fraction) -> list[tuple[int, int]]:
    """(p_j, q_j) for j = 0..n, the last one being q itself in lowest terms."""
    q = Fraction(q)
    a, b = q.numerator, q.denominator
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    out = []
    while b:
        t, r = divmod(a, b)
        p_prev, p_cur = p_cur, t * p_cur + p_prev
        q_prev, q_cur = q_cur, t * q_cur + q_prev
        out.append((p_cur, q_cur))
        a, b = b, r
    return out


def path_from_infinity(q: Cusp) -> list[tuple[int, int]]:
    """Unreduced Manin symbol pairs summing to {inf, q}."""
    if q is None:
        return []
    pairs = []
    q_prev = 0
    for j, (_, q_j) in enumerate(convergents(q)):
        sign = -1 if j % 2 == 0 else 1
        pairs.append((sign * q_j, q_prev))
        q_prev = q_j
    return pairs


def path_segments(q: Fraction) -> list[tuple[int, int, int, int]]:
    """SL_2 matrices g_j with g_j{0, inf} = {p_(j-1)/q_(j-1), p_j/q_j}."""
    out = []
    p_prev, q_prev = 1, 0
    for j, (p_j, q_j) in enumerate(convergents(q)):
        sign = -1 if j % 2 == 0 else 1
        out.append((sign * p_j, p_prev, sign * q_j, q_prev))
        p_prev, q_prev = p_j, q_j
    return out


def path_symbols(alpha: Cusp, beta: Cusp) -> list[tuple[int, tuple[int, int]]]:
    """(coefficient, (c, d)) terms of {alpha, beta}."""
    terms = [(1, pair) for pair in path_from_infinity(beta)]
    terms += [(-1, pair) for pair in path_from_infinity(alpha)]
    return terms


def lift_to_sl2(c: int, d: int, N: int) -> tuple[int, int, int, int]:
    """(a, b, c', d') in SL_2(Z) whose bottom row reduces to (c : d) mod N."""
    c %= N
    d %= N
    if c == 0:
        c = N if N > 1 else 0
    k = 0
    while xgcd(c, d + k * N)[2] != 1:
        k += 1
    d = d + k * N
    x, y, _ = xgcd(d, c)
    return (x, -y, c, d)


def _cusp(num: int, den: int) -> Cusp:
    return None if den == 0 else Fraction(num, den)


def symbol_endpoints(c: int, d: int, N: int) -> tuple[Cusp, Cusp]:
    """(c : d) = g{0, inf} = {b/d, a/c} for a lift g = [[a, b], [c, d]]."""
    a, b, c, d = lift_to_sl2(c, d, N)
    return _cusp(b, d), _cusp(a, c)


def fricke(z: Cusp, N: int) -> Cusp:
    """W_N z = -1/(N z)."""
    if z is None:
        return Fraction(0)
    if z == 0:
        return None
    return Fraction(-1) / (N * z)


def _terms_to_indices(space: ModularSymbolSpace, terms) -> list[tuple[int, int]]:
    return [(coef, space.p1.index(c, d)) for coef, (c, d) in terms]


def fricke_image(space: ModularSymbolSpace, index: int) -> list[tuple[int, int]]:
    alpha, beta = symbol_endpoints(*space.p1[index], space.level)
    N = space.level
    return _terms_to_indices(space, path_symbols(fricke(alpha, N), fricke(beta, N)))


def fricke_matrix(space: ModularSymbolSpace, sign: int = 1) -> list[list[Fraction]]:
    """W_N on a quotient; column k is the image of basis k."""
    quotient = space.quotient(sign)
    cols = [quotient.project_sum(fricke_image(space, gen)) for gen in quotient.basis]
    return linalg.transpose(cols) if cols else []


def hecke_image_by_paths(space: ModularSymbolSpace, index: int, p: int) -> list[tuple[int, int]]:
    """
    T_p on one generator via its endpoints:

        T_p{alpha, beta} = sum_r {(alpha+r)/p, (beta+r)/p} + [p !| N]{p alpha, p beta}
    """
    N = space.level
    alpha, beta = symbol_endpoints(*space.p1[index], N)

    def shift(z: Cusp, r: int) -> Cusp:
        return None if z is None else (z + r) / p

    def scale(z: Cusp) -> Cusp:
        return None if z is None else z * p

    terms = []
    for r in range(p):
        terms += path_symbols(shift(alpha, r), shift(beta, r))
    if N % p:
        terms += path_symbols(scale(alpha), scale(beta))
    return _terms_to_indices(space, terms)


def hecke_matrix_by_paths(space: ModularSymbolSpace, p: int, sign: int = 1) -> list[list[Fraction]]:
    """T_p from endpoint paths, as an independent check on the Merel formula."""
    quotient = space.quotient(sign)
    cols = [quotient.project_sum(hecke_image_by_paths(space, gen, p)) for gen in quotient.basis]
    return linalg.transpose(cols) if cols else []

