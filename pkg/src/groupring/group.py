"""
Finite abelian groups and the Galois groups G_M = (Z/M)* / {+-1}.

Elements are indexed 0..|G|-1 by mixed-radix exponent vectors over the
invariant factors; index 0 is the identity.
"""

from functools import cached_property, lru_cache
from math import prod

from sympy import totient
from sympy.ntheory import factorint, primitive_root

from ..core.arith import inverse_mod, units_mod
from ..core.errors import ModulusTooSmall, NotAUnit
from .snf import smith_normal_form


class AbelianGroup:
    """Z/d_1 x ... x Z/d_k with d_i > 1 given in increasing order."""

    def __init__(self, orders: tuple[int, ...]):
        if any(d < 2 for d in orders):
            raise ValueError(f"cyclic orders must be >= 2, got {orders}")
        self.orders = tuple(orders)
        self.order = prod(self.orders)
        strides = []
        step = 1
        for d in self.orders:
            strides.append(step)
            step *= d
        self._strides = tuple(strides)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"AbelianGroup{self.orders}"

    @property
    def structure(self) -> tuple[int, ...]:
        """Invariant factors; equal structures share filtration caches."""
        return self.orders

    @property
    def identity(self) -> int:
        return 0

    def exponents(self, index: int) -> tuple[int, ...]:
        return tuple((index // s) % d for s, d in zip(self._strides, self.orders))

    def index(self, exponents) -> int:
        return sum((e % d) * s for e, d, s in zip(exponents, self.orders, self._strides))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Index of the i-th cyclic generator."""
        return tuple(self._strides)

    @cached_property
    def mul_table(self) -> list[list[int]]:
        exps = [self.exponents(i) for i in range(self.order)]
        return [[self.index([x + y for x, y in zip(ei, ej)]) for ej in exps] for ei in exps]

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self.index([-e for e in self.exponents(i)]) for i in range(self.order))

    def inverse(self, i: int) -> int:
        return self.inverses[i]

    def element_order(self, i: int) -> int:
        k, j = 1, i
        while j != 0:
            j = self.mul(j, i)
            k += 1
        return k


def _crt_lift(x: int, q: int, M: int) -> int:
    """Residue mod M congruent to x mod q and to 1 mod M/q."""
    rest = M // q
    return (1 + rest * (((x - 1) * inverse_mod(rest, q)) % q)) % M


def _unit_generators(M: int) -> tuple[list[int], list[int], list[int]]:
    """
    CRT generators of (Z/M)*, their orders and the exponent vector of -1.

    Odd prime powers contribute a primitive root; 4 contributes -1; 2^e with
    e >= 3 contributes -1 and 5.
    """
    gens, orders, minus_one = [], [], []
    for p, e in sorted(factorint(M).items()):
        q = p**e
        if p == 2:
            if e == 1:
                continue
            gens.append(_crt_lift(-1, q, M))
            orders.append(2)
            minus_one.append(1)
            if e >= 3:
                gens.append(_crt_lift(5, q, M))
                orders.append(2 ** (e - 2))
                minus_one.append(0)
        else:
            phi = int(totient(q))
            gens.append(_crt_lift(primitive_root(q), q, M))
            orders.append(phi)
            minus_one.append(phi // 2)
    return gens, orders, minus_one


class GaloisGroup(AbelianGroup):
    """G_M = (Z/M)* / {+-1}, with sigma_a the class of the unit a."""

    def __init__(self, modulus: int):
        if modulus < 3:
            raise ModulusTooSmall(f"G_M needs M >= 3, got {modulus}")
        self.modulus = M = modulus

        gens, orders, minus_one = _unit_generators(M)
        k = len(gens)
        relations = [[orders[i] if j == i else 0 for j in range(k)] for i in range(k)]
        relations.append(minus_one)
        snf = smith_normal_form(relations) if k else None

        invariants, residues = [], []
        if snf is not None:
            for i, d in enumerate(snf.diagonal):
                if d > 1:
                    invariants.append(d)
                    r = 1
                    for g, e in zip(gens, snf.right_inverse[i]):
                        r = r * pow(g, e, M) % M
                    residues.append(r)
        super().__init__(tuple(invariants))
        self.generator_residues = tuple(residues)

        class_of: dict[int, int] = {}
        representative = [0] * self.order
        for index in range(self.order):
            a = 1 % M
            for g, e in zip(residues, self.exponents(index)):
                a = a * pow(g, e, M) % M
            rep = min(a, M - a)
            representative[index] = rep
            class_of[a] = class_of[M - a] = index
        self._class_of = class_of
        self._representative = tuple(representative)
        if len(class_of) != len(units_mod(M)):
            raise AssertionError(f"unit decomposition of (Z/{M})* is incomplete")

    def __repr__(self) -> str:
        return f"GaloisGroup(M={self.modulus}, orders={self.orders})"

    def index_of(self, a: int) -> int:
        """Index of sigma_a."""
        index = self._class_of.get(a % self.modulus)
        if index is None:
            raise NotAUnit(f"{a} is not a unit modulo {self.modulus}")
        return index

    def representative(self, index: int) -> int:
        """Smallest positive residue in the class {a, M - a}."""
        return self._representative[index]

    @property
    def representatives(self) -> tuple[int, ...]:
        return self._representative

    def residues(self, index: int) -> tuple[int, int]:
        a = self._representative[index]
        return (a, self.modulus - a)

    def elements_by_representative(self) -> list[int]:
        """Indices sorted by representative residue."""
        return sorted(range(self.order), key=self._representative.__getitem__)


@lru_cache(maxsize=None)
def galois_group(M: int) -> GaloisGroup:
    """G_M for M >= 3 (memoised; construction is deterministic)."""
    return GaloisGroup(M)
