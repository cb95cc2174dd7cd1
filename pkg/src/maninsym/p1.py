"""
The projective line P^1(Z/N) and Manin symbols (c : d).

Canonical representatives follow the classical reduction: scale so the
first entry becomes gcd(c, N), then take the smallest second entry among
scalings fixing that gcd.
"""

from dataclasses import dataclass
from math import gcd

from ..core.arith import xgcd
from ..core.errors import NotProjectivePoint


def _lift_unit(n: int, d: int, a: int) -> int:
    """Lift a unit a modulo d (d | n) to a unit modulo n."""
    u, v = 1, n
    g = gcd(v, d)
    while g > 1:
        u *= g
        v //= g
        g = gcd(v, g)
    x, y, _ = xgcd(u, v)
    return (u * x + a * y * v) % n


def p1_reduce(N: int, c: int, d: int) -> tuple[int, int]:
    """
    Canonical representative of (c : d) in P^1(Z/N).

    Raises:
        NotProjectivePoint: gcd(c, d, N) > 1
    """
    if N == 1:
        return (0, 0)
    c %= N
    d %= N
    if gcd(gcd(c, d), N) != 1:
        raise NotProjectivePoint(f"gcd({c}, {d}, {N}) > 1")
    if c == 0:
        return (0, 1)
    _, s, g = xgcd(N, c)
    s = _lift_unit(N, N // g, s)
    v = (s * d) % N
    if g == 1:
        return (1, v)
    step = N // g
    v = min((v * t) % N for t in range(1, N, step) if gcd(N, t) == 1)
    return (g, v)


@dataclass(frozen=True, order=True)
class ManinSymbol:
    """(c : d) in canonical form at level N."""
    level: int
    c: int
    d: int

    @classmethod
    def normalize(cls, N: int, c: int, d: int) -> "ManinSymbol":
        cc, dd = p1_reduce(N, c, d)
        return cls(N, cc, dd)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.c, self.d)


def p1_normalize(N: int, c: int, d: int) -> ManinSymbol:
    """Canonical ManinSymbol for (c : d); idempotent."""
    return ManinSymbol.normalize(N, c, d)


class P1List:
    """Sorted canonical representatives of P^1(Z/N) with index lookup."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError(f"level must be >= 1, got {N}")
        self.N = N
        reps = set()
        for c in [0] + [g for g in range(1, N) if N % g == 0]:
            for d in range(N):
                if gcd(gcd(c, d), N) == 1:
                    reps.add(p1_reduce(N, c, d))
        if N == 1:
            reps = {(0, 0)}
        self._list = sorted(reps)
        self._index = {pair: i for i, pair in enumerate(self._list)}

    def __len__(self) -> int:
        return len(self._list)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self._list[i]

    def __iter__(self):
        return iter(self._list)

    def index(self, c: int, d: int) -> int:
        """Index of the class of (c : d); raises NotProjectivePoint."""
        return self._index[p1_reduce(self.N, c, d)]

    def try_index(self, c: int, d: int) -> int:
        """Index, or -1 when gcd(c, d, N) > 1."""
        if self.N > 1 and gcd(gcd(c % self.N, d % self.N), self.N) != 1:
            return -1
        return self.index(c, d)
