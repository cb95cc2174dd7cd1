"""
Smith normal form over the integers with tracked transforms.

U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
V^{-1} is carried alongside V so quotient coordinates and generators of
Z^n / rowspan(A) can be read off without inverting anything afterwards.
"""

from dataclasses import dataclass


@dataclass
class SmithForm:
    """Result of smith_normal_form."""
    diagonal: list[int]          # d_1 | d_2 | ... (length min(m, n))
    left: list[list[int]]        # U, m x m
    right: list[list[int]]       # V, n x n
    right_inverse: list[list[int]]  # V^{-1}, n x n


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: list[list[int]]) -> SmithForm:
    """Compute the Smith normal form of an integer matrix (list of rows)."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    U = _identity(m)
    V = _identity(n)
    V_inv = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        # col dst += q * col src
        if q:
            for row in a:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]
            V_inv[src] = [x - q * y for x, y in zip(V_inv[src], V_inv[dst])]

    for t in range(min(m, n)):
        while True:
            # Smallest nonzero entry of the trailing block becomes the pivot
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            pivot = a[t][t]

            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue

            # Pivot must divide the whole trailing block
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    diagonal = [a[i][i] for i in range(min(m, n))]
    return SmithForm(diagonal=diagonal, left=U, right=V, right_inverse=V_inv)
