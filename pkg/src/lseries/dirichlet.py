"""
Dirichlet characters with exact angles, and Gauss sums.

chi(n) = exp(2 pi i * angle(n)) for units n mod m and 0 otherwise. Values
are produced as mpmath numbers at the caller's working precision.
"""

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from math import gcd
from typing import Optional

import mpmath

from ..core.arith import divisors, lift_unit, units_mod
from ..core.errors import NotPrimitive
from ..groupring import CharacterValue, GaloisGroup


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod m stored as {unit residue: angle}."""
    modulus: int
    angles: tuple[tuple[int, Fraction], ...]
    label: str = ""

    @classmethod
    def trivial(cls, modulus: int = 1) -> "DirichletCharacter":
        return cls(modulus, tuple((a, Fraction(0)) for a in units_mod(modulus)), "chi0")

    @classmethod
    def from_group_character(cls, chi: CharacterValue) -> "DirichletCharacter":
        """The even character mod M that factors through G_M as chi."""
        G = chi.group
        if not isinstance(G, GaloisGroup):
            raise TypeError("need a character of a Galois group G_M")
        M = G.modulus
        return cls(M, tuple((a, chi.angle(G.index_of(a))) for a in units_mod(M)), chi.label)

    @cached_property
    def _table(self) -> dict[int, Fraction]:
        return dict(self.angles)

    def angle(self, n: int) -> Optional[Fraction]:
        """angle(n) in [0, 1), or None when gcd(n, m) > 1."""
        return self._table.get(n % self.modulus)

    def __call__(self, n: int):
        a = self.angle(n)
        if a is None:
            return mpmath.mpc(0)
        return mpmath.expjpi(2 * mpmath.mpf(a.numerator) / a.denominator)

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.modulus,
            tuple((r, (-a) % 1) for r, a in self.angles),
            f"conj({self.label})" if self.label else "",
        )

    @property
    def is_even(self) -> bool:
        return self.angle(-1) == 0

    @property
    def is_trivial(self) -> bool:
        return all(a == 0 for _, a in self.angles)

    @property
    def order(self) -> int:
        d = 1
        for _, a in self.angles:
            d = d * a.denominator // gcd(d, a.denominator)
        return d

    def conductor(self) -> int:
        m = self.modulus
        for f in divisors(m):
            if all(a == 0 for r, a in self.angles if (r - 1) % f == 0):
                return f
        return m

    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def primitive(self) -> "DirichletCharacter":
        """The primitive character inducing this one."""
        f = self.conductor()
        if f == self.modulus:
            return self
        angles = tuple((b, self.angle(lift_unit(b, f, self.modulus))) for b in units_mod(f))
        return DirichletCharacter(f, angles, self.label)


def gauss_sum(chi: DirichletCharacter):
    """
    tau(chi) = sum over a mod m of chi(a) exp(2 pi i a / m).

    Raises:
        NotPrimitive: chi has conductor smaller than its modulus
    """
    if not chi.is_primitive():
        raise NotPrimitive(f"character {chi.label or ''} mod {chi.modulus} has conductor {chi.conductor()}")
    m = chi.modulus
    if m == 1:
        return mpmath.mpc(1)
    total = mpmath.mpc(0)
    for r, a in chi.angles:
        total += mpmath.expjpi(2 * (mpmath.mpf(a.numerator) / a.denominator + mpmath.mpf(r) / m))
    return total
