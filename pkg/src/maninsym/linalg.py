"""
Exact rational linear algebra on top of sympy's DomainMatrix over QQ.

Matrices cross this boundary as lists of Fraction rows; everything inside
runs in the sparse QQ domain.
"""

from fractions import Fraction

from sympy import Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def _to_qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def to_domain(rows: list[list], ncols: int = None) -> DomainMatrix:
    """Sparse QQ DomainMatrix from rows of rationals."""
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = {}
    for i, row in enumerate(rows):
        entries = {j: _to_qq(v) for j, v in enumerate(row) if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (nrows, ncols), QQ)


def sparse_to_domain(rows: list[dict[int, Fraction]], ncols: int) -> DomainMatrix:
    """Sparse QQ DomainMatrix from {column: value} rows."""
    data = {}
    for i, row in enumerate(rows):
        entries = {j: _to_qq(v) for j, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def from_domain(matrix: DomainMatrix) -> list[list[Fraction]]:
    return [[_from_qq(x) for x in row] for row in matrix.to_dense().to_list()]


def rref(rows: list[dict[int, Fraction]], ncols: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if not rows:
        return [], ()
    reduced, pivots = sparse_to_domain(rows, ncols).rref()
    dense = from_domain(reduced)
    return dense[: len(pivots)], tuple(pivots)


def nullspace(rows: list[list[Fraction]], ncols: int = None) -> list[list[Fraction]]:
    """Basis (as rows) of {v : A v = 0}."""
    ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref([{j: v for j, v in enumerate(row) if v} for row in rows], ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -reduced[i][f]
        basis.append(vec)
    return basis


def rank(rows: list[list[Fraction]], ncols: int = None) -> int:
    ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return len(rref([{j: v for j, v in enumerate(row) if v} for row in rows], ncols)[1])


def mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def transpose(a: list[list[Fraction]]) -> list[list[Fraction]]:
    return [list(col) for col in zip(*a)]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_sympy(a: list[list[Fraction]]) -> Matrix:
    """sympy Matrix of Rationals (for eigenvalues and user-facing results)."""
    if not a:
        return Matrix(0, 0, [])
    return Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in a])


def from_sympy(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols)] for i in range(m.rows)]
