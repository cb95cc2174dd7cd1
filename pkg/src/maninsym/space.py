"""
Modular symbols for Gamma_0(N) presented by Manin symbols.

The quotient of the free module on P^1(Z/N) by the two-term relations
x + xS = 0 (and x = x* for the plus quotient) is taken first with a signed
union-find; the three-term relations x + xT + xT^2 = 0 are then solved by
exact sparse elimination over QQ. Every generator gets a sparse coordinate
vector on the free basis.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..core.logging import debug_log
from . import linalg
from .p1 import ManinSymbol, P1List

Coords = dict[int, Fraction]


def s_pair(c: int, d: int) -> tuple[int, int]:
    return (d, -c)


def t_pair(c: int, d: int) -> tuple[int, int]:
    return (d, -c - d)


def t2_pair(c: int, d: int) -> tuple[int, int]:
    return (-c - d, c)


def star_pair(c: int, d: int) -> tuple[int, int]:
    return (-c, d)


class _SignedUnionFind:
    """Classes of generators with x_i = sign * x_root; a class with x = -x is zero."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.sign = [1] * n
        self.zero = [False] * n

    def find(self, i: int) -> tuple[int, int]:
        s = 1
        path = []
        while self.parent[i] != i:
            path.append(i)
            s *= self.sign[i]
            i = self.parent[i]
        root = i
        # compress
        acc = s
        for j in path:
            old = self.sign[j]
            self.parent[j] = root
            self.sign[j] = acc
            acc *= old
        return root, s

    def union(self, i: int, j: int, s: int):
        """Impose x_i = s * x_j."""
        ri, si = self.find(i)
        rj, sj = self.find(j)
        t = si * s * sj
        if ri == rj:
            if t == -1:
                self.zero[ri] = True
            return
        small, big = min(ri, rj), max(ri, rj)
        self.parent[big] = small
        self.sign[big] = t
        self.zero[small] = self.zero[small] or self.zero[big]


@dataclass
class QuotientPresentation:
    """Free basis of one quotient and coordinates of every generator on it."""
    sign: int
    basis: tuple[int, ...]
    coords: list[Coords] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vector(self, index: int) -> Coords:
        return self.coords[index]

    def dense(self, index: int) -> list[Fraction]:
        vec = [Fraction(0)] * self.dimension
        for k, v in self.coords[index].items():
            vec[k] = v
        return vec

    def project_sum(self, terms) -> list[Fraction]:
        """Dense coordinates of sum(coef * generator) over (coef, index) terms."""
        vec = [Fraction(0)] * self.dimension
        for coef, index in terms:
            for k, v in self.coords[index].items():
                vec[k] += coef * v
        return vec


def _present(p1: P1List, sign: int) -> QuotientPresentation:
    n = len(p1)
    uf = _SignedUnionFind(n)
    for i, (c, d) in enumerate(p1):
        uf.union(i, p1.index(*s_pair(c, d)), -1)
        if sign:
            uf.union(i, p1.index(*star_pair(c, d)), 1)

    reps = {}
    for i in range(n):
        root, s = uf.find(i)
        reps[i] = (root, 0 if uf.zero[root] else s)
    roots = sorted({r for r, s in reps.values() if s})
    column = {r: k for k, r in enumerate(roots)}

    rows, seen = [], set()
    for i, (c, d) in enumerate(p1):
        orbit = (i, p1.index(*t_pair(c, d)), p1.index(*t2_pair(c, d)))
        key = frozenset(orbit)
        if len(key) == 3 and key in seen:
            continue
        seen.add(key)
        row: Coords = {}
        for j in orbit:
            root, s = reps[j]
            if s:
                k = column[root]
                row[k] = row.get(k, Fraction(0)) + s
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)

    reduced, pivots = linalg.rref(rows, len(roots))
    free = [k for k in range(len(roots)) if k not in set(pivots)]
    position = {k: pos for pos, k in enumerate(free)}

    root_coords: dict[int, Coords] = {}
    for k in free:
        root_coords[roots[k]] = {position[k]: Fraction(1)}
    for r, k in enumerate(pivots):
        root_coords[roots[k]] = {
            position[f]: -reduced[r][f] for f in free if reduced[r][f]
        }

    coords = []
    for i in range(n):
        root, s = reps[i]
        coords.append({k: s * v for k, v in root_coords[root].items()} if s else {})
    basis = tuple(roots[k] for k in free)
    return QuotientPresentation(sign=sign, basis=basis, coords=coords)


class ModularSymbolSpace:
    """Weight-2 modular symbols for Gamma_0(N): full and plus quotients, star involution."""

    def __init__(self, N: int):
        self.level = N
        self.p1 = P1List(N)
        self.generators = [ManinSymbol(N, c, d) for c, d in self.p1]
        self.full = _present(self.p1, 0)
        self.plus = _present(self.p1, 1)
        debug_log(
            f"modular symbols N={N}: {len(self.p1)} generators, "
            f"dim {self.full.dimension}, plus dim {self.plus.dimension}"
        )

    def __repr__(self) -> str:
        return f"ModularSymbolSpace(N={self.level}, dim={self.full.dimension}, plus={self.plus.dimension})"

    def quotient(self, sign: int = 1) -> QuotientPresentation:
        if sign not in (0, 1):
            raise ValueError(f"sign must be 0 or 1, got {sign}")
        return self.plus if sign else self.full

    def dimension(self, sign: int = 1) -> int:
        return self.quotient(sign).dimension

    def relation_rows(self, sign: int = 1) -> list[Coords]:
        """Every S and T relation (and x - x* for sign 1) as rows over the generators."""
        p1 = self.p1
        rows = []
        for i, (c, d) in enumerate(p1):
            s_row: Coords = {}
            for j in (i, p1.index(*s_pair(c, d))):
                s_row[j] = s_row.get(j, Fraction(0)) + 1
            rows.append(s_row)
            t_row: Coords = {}
            for j in (i, p1.index(*t_pair(c, d)), p1.index(*t2_pair(c, d))):
                t_row[j] = t_row.get(j, Fraction(0)) + 1
            rows.append(t_row)
            if sign:
                star_row: Coords = {i: Fraction(1)}
                j = p1.index(*star_pair(c, d))
                star_row[j] = star_row.get(j, Fraction(0)) - 1
                rows.append(star_row)
        return [{k: v for k, v in row.items() if v} for row in rows]

    def star_matrix(self) -> list[list[Fraction]]:
        """Star involution on the full quotient; column k is the image of basis k."""
        full = self.full
        cols = []
        for gen in full.basis:
            c, d = self.p1[gen]
            cols.append(full.dense(self.p1.index(*star_pair(c, d))))
        return linalg.transpose(cols) if cols else []

    def plus_basis(self) -> list[list[Fraction]]:
        """Basis of the +1 eigenspace of star inside the full quotient."""
        star = self.star_matrix()
        n = len(star)
        if n == 0:
            return []
        shifted = [[star[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        return linalg.nullspace(shifted, n)


@lru_cache(maxsize=16)
def build_space(N: int) -> ModularSymbolSpace:
    """Memoised ModularSymbolSpace for level N >= 1."""
    if N < 1:
        raise ValueError(f"level must be >= 1, got {N}")
    return ModularSymbolSpace(N)
