"""
Group-ring elements over Z, Q and localisations Z[1/S].

Coefficients are stored as Fractions indexed by group element; the ring
tag records which coefficients are legal.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from ..core.arith import prime_divisors
from ..core.errors import NotADivisor
from ..core.formatting import format_rational
from .group import AbelianGroup, GaloisGroup

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class CoefficientRing:
    """A subring of Q: Z with the primes in `inverted` inverted, or all of Q."""
    name: str
    inverted: frozenset = frozenset()
    is_field: bool = False

    def is_unit(self, n: int) -> bool:
        """Whether the nonzero integer n is invertible in the ring."""
        if n == 0:
            return False
        if self.is_field:
            return True
        return all(p in self.inverted for p in prime_divisors(n))

    def unit_part(self, n: int) -> int:
        """Largest divisor of |n| that is a unit of the ring."""
        n = abs(n)
        if self.is_field:
            return n
        part = 1
        for p in self.inverted:
            while n % p == 0:
                n //= p
                part *= p
        return part

    def contains(self, value: Scalar) -> bool:
        return self.is_unit(Fraction(value).denominator)

    def __str__(self) -> str:
        return self.name


INTEGERS = CoefficientRing("Z")
RATIONALS = CoefficientRing("Q", is_field=True)
Z_HALF = CoefficientRing("Z[1/2]", frozenset({2}))

_RINGS_BY_NAME = {"Z": INTEGERS, "Q": RATIONALS, "Z[1/2]": Z_HALF}


def localization(primes: Iterable[int]) -> CoefficientRing:
    """Z[1/S] for the given primes."""
    primes = frozenset(primes)
    if not primes:
        return INTEGERS
    name = "Z[1/" + ",".join(str(p) for p in sorted(primes)) + "]"
    return CoefficientRing(name, primes)


def ring_from_name(name: str) -> CoefficientRing:
    """Parse "Z", "Q", "Z[1/2]" or "Z[1/2,3]"."""
    if name in _RINGS_BY_NAME:
        return _RINGS_BY_NAME[name]
    if name.startswith("Z[1/") and name.endswith("]"):
        return localization(int(p) for p in name[4:-1].split(","))
    raise ValueError(f"unknown coefficient ring {name!r}")


def join_rings(a: CoefficientRing, b: CoefficientRing) -> CoefficientRing:
    """Smallest tagged ring containing both."""
    if a == b:
        return a
    if a.is_field or b.is_field:
        return RATIONALS
    return localization(a.inverted | b.inverted)


def _same_group(g: AbelianGroup, h: AbelianGroup) -> bool:
    if g is h:
        return True
    return g.structure == h.structure and getattr(g, "modulus", None) == getattr(h, "modulus", None)


class GroupRingElement:
    """An element of R[G], sum of coeffs[i] * g_i."""

    __slots__ = ("group", "coeffs", "ring")

    def __init__(self, group: AbelianGroup, coeffs: Iterable[Scalar], ring: CoefficientRing = INTEGERS):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != group.order:
            raise ValueError(f"expected {group.order} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if not ring.contains(c):
                raise ValueError(f"coefficient {c} is not in {ring}")
        self.group = group
        self.coeffs = coeffs
        self.ring = ring

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, group: AbelianGroup, ring: CoefficientRing = INTEGERS) -> "GroupRingElement":
        return cls(group, [0] * group.order, ring)

    @classmethod
    def basis(cls, group: AbelianGroup, index: int, ring: CoefficientRing = INTEGERS) -> "GroupRingElement":
        coeffs = [0] * group.order
        coeffs[index] = 1
        return cls(group, coeffs, ring)

    @classmethod
    def one(cls, group: AbelianGroup, ring: CoefficientRing = INTEGERS) -> "GroupRingElement":
        return cls.basis(group, group.identity, ring)

    @classmethod
    def from_residues(
        cls, group: GaloisGroup, values: dict[int, Scalar], ring: CoefficientRing = INTEGERS
    ) -> "GroupRingElement":
        """Build from {residue: coefficient}; residues in one class add up."""
        coeffs = [Fraction(0)] * group.order
        for a, c in values.items():
            coeffs[group.index_of(a)] += Fraction(c)
        return cls(group, coeffs, ring)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "GroupRingElement"):
        if not _same_group(self.group, other.group):
            raise ValueError(f"group mismatch: {self.group!r} vs {other.group!r}")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return self + other * GroupRingElement.one(self.group, self.ring)
        self._check(other)
        return GroupRingElement(
            self.group, (a + b for a, b in zip(self.coeffs, other.coeffs)), join_rings(self.ring, other.ring)
        )

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, (-a for a in self.coeffs), self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            self._check(other)
            table = self.group.mul_table
            out = [Fraction(0)] * self.group.order
            for i, a in enumerate(self.coeffs):
                if a:
                    row = table[i]
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[row[j]] += a * b
            return GroupRingElement(self.group, out, join_rings(self.ring, other.ring))
        scalar = Fraction(other)
        ring = self.ring if self.ring.contains(scalar) else join_rings(
            self.ring, localization(prime_divisors(scalar.denominator))
        )
        return GroupRingElement(self.group, (scalar * a for a in self.coeffs), ring)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return _same_group(self.group, other.group) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.group.structure, self.coeffs))

    def __getitem__(self, index: int) -> Fraction:
        return self.coeffs[index]

    def __repr__(self) -> str:
        return f"GroupRingElement({self.dump()})"

    # -- queries --------------------------------------------------------------

    def coeff(self, a: int) -> Fraction:
        """Coefficient of sigma_a (Galois groups only)."""
        return self.coeffs[self.group.index_of(a)]

    def augmentation(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def integer_vector(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("element has non-integral coefficients")
        return [c.numerator for c in self.coeffs]

    def with_ring(self, ring: CoefficientRing) -> "GroupRingElement":
        return GroupRingElement(self.group, self.coeffs, ring)

    def dump(self) -> str:
        """`M; a:coeff, ...` ordered by smallest residue (index order for abstract groups)."""
        if isinstance(self.group, GaloisGroup):
            G = self.group
            terms = ", ".join(
                f"{G.representative(i)}:{format_rational(self.coeffs[i])}"
                for i in G.elements_by_representative()
            )
            return f"{G.modulus}; {terms}"
        terms = ", ".join(f"{i}:{format_rational(c)}" for i, c in enumerate(self.coeffs))
        return f"{list(self.group.orders)}; {terms}"


def parse_dump(text: str, group: GaloisGroup = None, ring: CoefficientRing = INTEGERS) -> GroupRingElement:
    """Inverse of GroupRingElement.dump for Galois groups."""
    from .group import galois_group

    head, _, body = text.partition(";")
    M = int(head.strip())
    G = group if group is not None else galois_group(M)
    if G.modulus != M:
        raise ValueError(f"dump is for M={M}, group has M={G.modulus}")
    values = {}
    for term in body.split(","):
        term = term.strip()
        if term:
            a, c = term.split(":")
            values[int(a)] = Fraction(c)
    return GroupRingElement.from_residues(G, values, ring)


def sigma(G: GaloisGroup, a: int, ring: CoefficientRing = INTEGERS) -> GroupRingElement:
    """The basis element sigma_a; raises NotAUnit if gcd(a, M) > 1."""
    return GroupRingElement.basis(G, G.index_of(a), ring)


def project(source: GaloisGroup, target: GaloisGroup, xi: GroupRingElement) -> GroupRingElement:
    """Ring map R[G_M'] -> R[G_M] induced by reduction mod M, for M | M'."""
    if source.modulus % target.modulus:
        raise NotADivisor(f"{target.modulus} does not divide {source.modulus}")
    if not _same_group(xi.group, source):
        raise ValueError(f"element lives in {xi.group!r}, not {source!r}")
    out = [Fraction(0)] * target.order
    for i, c in enumerate(xi.coeffs):
        if c:
            out[target.index_of(source.representative(i))] += c
    return GroupRingElement(target, out, xi.ring)


def corestriction(source: GaloisGroup, target: GaloisGroup, xi: GroupRingElement) -> GroupRingElement:
    """
    Map R[G_M] -> R[G_M'] for M | M' sending sigma_b to the sum of all
    sigma_a with a = b mod M.
    """
    if target.modulus % source.modulus:
        raise NotADivisor(f"{source.modulus} does not divide {target.modulus}")
    if not _same_group(xi.group, source):
        raise ValueError(f"element lives in {xi.group!r}, not {source!r}")
    coeffs = [xi.coeffs[source.index_of(target.representative(j))] for j in range(target.order)]
    return GroupRingElement(target, coeffs, xi.ring)


def involution(xi: GroupRingElement) -> GroupRingElement:
    """sigma_g -> sigma_{g^-1}, extended linearly."""
    inv = xi.group.inverses
    out = [Fraction(0)] * xi.group.order
    for i, c in enumerate(xi.coeffs):
        out[inv[i]] = c
    return GroupRingElement(xi.group, out, xi.ring)


def multiply_by_group_element(xi: GroupRingElement, index: int) -> GroupRingElement:
    """xi * g for the group element with the given index."""
    row = xi.group.mul_table[index]
    out = [Fraction(0)] * xi.group.order
    for i, c in enumerate(xi.coeffs):
        out[row[i]] = c
    return GroupRingElement(xi.group, out, xi.ring)
