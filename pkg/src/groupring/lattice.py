"""
Integer lattices in echelon form.

Vectors are inserted one at a time; each pivot collision is resolved with an
extended-gcd row combination, so the basis is always an echelon basis of the
lattice spanned so far. Membership is exact.

A lattice built with a modulus D is L + D*Z^n. Every column then carries a
pivot dividing D, and entries right of a pivot are kept in [0, D), so
coefficients stay bounded however many vectors are inserted.
"""

from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Optional

from ..core.arith import xgcd
from .element import CoefficientRing


class Lattice:
    """Sublattice of Z^n with an echelon basis keyed by pivot column."""

    __slots__ = ("dimension", "modulus", "_rows")

    def __init__(self, dimension: int, vectors: Iterable[list[int]] = (), modulus: Optional[int] = None):
        if modulus is not None and modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        self.dimension = dimension
        self.modulus = modulus
        # pivot column -> row whose first nonzero entry sits there
        self._rows: dict[int, list[int]] = {}
        if modulus is not None:
            for j in range(dimension):
                row = [0] * dimension
                row[j] = modulus
                self._rows[j] = row
        for vec in vectors:
            self.add_vector(vec)

    def copy(self) -> "Lattice":
        other = Lattice(self.dimension)
        other.modulus = self.modulus
        other._rows = {j: row.copy() for j, row in self._rows.items()}
        return other

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    @property
    def basis(self) -> list[list[int]]:
        return [self._rows[j] for j in self.pivots]

    def index(self) -> int:
        """Product of pivot entries; the saturation of L has exponent dividing it."""
        return prod(abs(self._rows[j][j]) for j in self._rows)

    def _reduce_tail(self, vec: list[int], start: int):
        D = self.modulus
        if D is not None:
            for jj in range(start, self.dimension):
                if vec[jj]:
                    vec[jj] %= D

    def add_vector(self, vec0: list[int]):
        N = self.dimension
        if len(vec0) != N:
            raise ValueError(f"expected length {N}, got {len(vec0)}")
        vec = [int(x) for x in vec0]
        self._reduce_tail(vec, 0)
        rows = self._rows
        for j in range(N):
            b = vec[j]
            if not b:
                continue
            row = rows.get(j)
            if row is None:
                rows[j] = vec
                return
            a = row[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, N):
                    vec[jj] -= q * row[jj]
            elif a % b == 0:
                # swap roles, then clear the old row against the new pivot
                rows[j] = vec
                q = a // b
                vec = [x - q * y for x, y in zip(row, rows[j])]
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                new_row = row[:j] + [x * r + y * v for r, v in zip(row[j:], vec[j:])]
                vec = vec[:j] + [mbg * r + ag * v for r, v in zip(row[j:], vec[j:])]
                self._reduce_tail(new_row, j + 1)
                rows[j] = new_row
            self._reduce_tail(vec, j + 1)

    def hermite_reduce(self):
        """Positive pivots and entries above each pivot reduced into [0, pivot)."""
        pivots = self.pivots
        for j in pivots:
            row = self._rows[j]
            if row[j] < 0:
                self._rows[j] = [-x for x in row]
        for k, j in enumerate(pivots):
            pivot_row = self._rows[j]
            p = pivot_row[j]
            for i in pivots[:k]:
                row = self._rows[i]
                q = row[j] // p
                if q:
                    self._rows[i] = [x - q * y for x, y in zip(row, pivot_row)]

    def __contains__(self, vec: list[int]) -> bool:
        vec = [int(x) for x in vec]
        N = self.dimension
        for j in range(N):
            b = vec[j]
            if not b:
                continue
            row = self._rows.get(j)
            if row is None:
                return False
            a = row[j]
            if b % a:
                return False
            q = b // a
            for jj in range(j, N):
                vec[jj] -= q * row[jj]
        return True

    def contains_over(self, vec: Iterable, ring: CoefficientRing) -> bool:
        """
        Membership in L tensor R for a subring R of Q.

        v lies in L (x) R iff K*v lies in L, where K is the R-unit part of
        the pivot product; rational entries are first cleared by their
        denominator, which must itself be an R-unit.
        """
        fractions = [Fraction(x) for x in vec]
        denom = lcm(*(f.denominator for f in fractions)) if fractions else 1
        if not ring.is_unit(denom):
            return False
        scale = ring.unit_part(self.index())
        return [int(f * denom) * scale for f in fractions] in self

    def issubset(self, other: "Lattice", ring: CoefficientRing) -> bool:
        return all(other.contains_over(row, ring) for row in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        a, b = self.copy(), other.copy()
        a.hermite_reduce()
        b.hermite_reduce()
        return a.dimension == b.dimension and a.basis == b.basis

    def __repr__(self) -> str:
        return f"Lattice(dim={self.dimension}, rank={self.rank}, index={self.index()})"
