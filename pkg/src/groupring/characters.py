"""
Complex characters of finite abelian groups.

A character is stored exactly by the angles of its generator images
(chi(gen_i) = exp(2 pi i k_i / d_i)); numeric evaluation uses numpy complex
doubles. Characters of G_M are even Dirichlet characters mod M.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

import numpy as np

from ..core.arith import divisors, units_mod
from .element import GroupRingElement
from .group import AbelianGroup, GaloisGroup


@dataclass(frozen=True)
class CharacterValue:
    """chi with chi(gen_i) = exp(2 pi i * angles[i])."""
    group: AbelianGroup
    angles: tuple[Fraction, ...]
    index: int = 0

    @property
    def label(self) -> str:
        return f"chi{self.index}"

    @property
    def order(self) -> int:
        return lcm(*(a.denominator for a in self.angles)) if self.angles else 1

    @property
    def is_trivial(self) -> bool:
        return all(a == 0 for a in self.angles)

    @property
    def is_even(self) -> bool:
        # -1 is already quotiented out of G_M
        return True

    def angle(self, element: int) -> Fraction:
        """Exact argument of chi(g) / (2 pi), reduced into [0, 1)."""
        total = sum((a * e for a, e in zip(self.angles, self.group.exponents(element))), Fraction(0))
        return total - (total.numerator // total.denominator)

    @cached_property
    def values(self) -> np.ndarray:
        """chi(g) for every element index."""
        angles = np.array([float(self.angle(g)) for g in range(self.group.order)])
        return np.exp(2j * np.pi * angles)

    def __call__(self, element: int) -> complex:
        return complex(self.values[element])

    def conjugate(self) -> "CharacterValue":
        inv = tuple((-a) % 1 for a in self.angles)
        return CharacterValue(self.group, inv, _character_index(self.group, inv))


def _character_index(group: AbelianGroup, angles: tuple[Fraction, ...]) -> int:
    return group.index([int(a * d) for a, d in zip(angles, group.orders)])


def characters(G: AbelianGroup) -> list[CharacterValue]:
    """All |G| characters; the j-th sends gen_i to exp(2 pi i k_i / d_i) with k = exponents(j)."""
    out = []
    for j in range(G.order):
        ks = G.exponents(j)
        angles = tuple(Fraction(k, d) for k, d in zip(ks, G.orders))
        out.append(CharacterValue(G, angles, j))
    return out


def evaluate(chi: CharacterValue, xi: GroupRingElement) -> complex:
    """chi extended linearly to C[G]."""
    coeffs = np.array([float(c) for c in xi.coeffs])
    return complex(np.dot(chi.values, coeffs))


def character_table(G: AbelianGroup) -> np.ndarray:
    """Rows indexed by character, columns by element."""
    return np.array([chi.values for chi in characters(G)])


def orthogonality_defect(G: AbelianGroup) -> float:
    """max_g |sum_chi chi(g) - |G| [g = 1]|."""
    column_sums = character_table(G).sum(axis=0)
    expected = np.zeros(G.order)
    expected[0] = G.order
    return float(np.max(np.abs(column_sums - expected)))


def conductor(chi: CharacterValue) -> int:
    """Smallest f | M with chi trivial on the units congruent to 1 mod f."""
    G = chi.group
    if not isinstance(G, GaloisGroup):
        raise TypeError("conductor needs a Galois group G_M")
    M = G.modulus
    units = units_mod(M)
    for f in divisors(M):
        if all(chi.angle(G.index_of(a)) == 0 for a in units if (a - 1) % f == 0):
            return f
    return M


def is_primitive(chi: CharacterValue) -> bool:
    """Primitive modulo M, the modulus of its group."""
    return conductor(chi) == chi.group.modulus


def fourier_inverse(G: AbelianGroup, values: dict[int, complex]) -> np.ndarray:
    """Coefficients c_g = |G|^-1 sum_chi conj(chi(g)) chi(xi) from all character values."""
    if len(values) != G.order:
        raise ValueError(f"need all {G.order} character values, got {len(values)}")
    table = character_table(G)
    vec = np.array([values[j] for j in range(G.order)])
    return (np.conj(table).T @ vec) / G.order
