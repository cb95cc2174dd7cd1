"""
Hecke operators on Manin symbols through Merel's set of matrices.

X_p = {[[a, b], [c, d]] : ad - bc = p, a > b >= 0, d > c >= 0} acts on the
right: (c : d) * [[a, b], [c', d']] = (ca + dc' : cb + dd'). Images with
gcd(c, d, N) > 1 are dropped.
"""

from fractions import Fraction
from functools import lru_cache

from sympy import Matrix

from . import linalg
from .space import ModularSymbolSpace


@lru_cache(maxsize=64)
def merel(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """Merel's matrices of determinant n as (a, b, c, d) tuples."""
    if n < 1:
        raise ValueError(f"determinant must be positive, got {n}")
    out = []
    for a in range(1, n + 1):
        for d in range(1, n + 1):
            bc = a * d - n
            if bc < 0:
                continue
            if bc == 0:
                out.extend((a, 0, c, d) for c in range(d))
                out.extend((a, b, 0, d) for b in range(1, a))
                continue
            for b in range(1, a):
                if bc % b == 0:
                    c = bc // b
                    if c < d:
                        out.append((a, b, c, d))
    return tuple(out)


def act(pair: tuple[int, int], matrix: tuple[int, int, int, int]) -> tuple[int, int]:
    c, d = pair
    a, b, c2, d2 = matrix
    return (c * a + d * c2, c * b + d * d2)


def hecke_image(space: ModularSymbolSpace, index: int, p: int) -> list[tuple[int, int]]:
    """(coefficient, generator index) terms of T_p applied to one generator."""
    pair = space.p1[index]
    terms = []
    for m in merel(p):
        j = space.p1.try_index(*act(pair, m))
        if j >= 0:
            terms.append((1, j))
    return terms


def hecke_rows(space: ModularSymbolSpace, p: int, sign: int = 1) -> list[list[Fraction]]:
    """T_p on a quotient as Fraction rows; column k is the image of basis k."""
    quotient = space.quotient(sign)
    cols = [quotient.project_sum(hecke_image(space, gen, p)) for gen in quotient.basis]
    return linalg.transpose(cols) if cols else []


def hecke_matrix(space: ModularSymbolSpace, p: int, sign: int = 1) -> Matrix:
    """T_p on the plus (sign=1) or full (sign=0) quotient."""
    return linalg.to_sympy(hecke_rows(space, p, sign))
