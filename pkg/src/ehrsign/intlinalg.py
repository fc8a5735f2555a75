"""Exact integer linear algebra used by the geometry and counting code.

Everything here works on small square-ish matrices (dimension <= ~12) given
as lists of int rows, so simple cubic algorithms in arbitrary-precision
integers are plenty.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[int]]


def det(matrix: Matrix) -> int:
    """Determinant via Bareiss fraction-free elimination (exact, integer)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def adjugate(matrix: Matrix) -> tuple[Matrix, int]:
    """Return (adj, det) with matrix @ adj = det * I, all integer.

    Computed by rational Gauss-Jordan inversion scaled back by the
    determinant; asserts integrality of the result.
    """
    n = len(matrix)
    d = det(matrix)
    if d == 0:
        raise ZeroDivisionError("adjugate of a singular matrix")
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    adj: Matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = aug[i][n + j] * d
            assert entry.denominator == 1
            row.append(int(entry))
        adj.append(row)
    return adj, d


def hermite_diagonal(matrix: Matrix) -> list[int]:
    """Pivots of the row Hermite form of a nonsingular integer matrix.

    Integer row elimination brings the matrix to upper-triangular shape with
    positive pivots; the lattice generated by the rows has index equal to the
    product of the pivots, and the integer boxes [0, pivot_i) enumerate the
    quotient-group coset representatives coordinate by coordinate.
    """
    n = len(matrix)
    m = [row[:] for row in matrix]
    for col in range(n):
        # gcd-reduce the column below the pivot by repeated remainder steps
        while True:
            nonzero = [r for r in range(col, n) if m[r][col] != 0]
            if not nonzero:
                raise ZeroDivisionError("matrix is singular")
            r_min = min(nonzero, key=lambda r: abs(m[r][col]))
            m[col], m[r_min] = m[r_min], m[col]
            done = True
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    q = m[r][col] // m[col][col]
                    m[r] = [a - q * b for a, b in zip(m[r], m[col])]
                    if m[r][col] != 0:
                        done = False
            if done:
                break
        if m[col][col] < 0:
            m[col] = [-a for a in m[col]]
    return [m[i][i] for i in range(n)]


def content_reduce(vector: list[int]) -> list[int]:
    """Divide an integer vector by the gcd of its entries (zero vector unchanged)."""
    g = 0
    for v in vector:
        g = gcd(g, abs(v))
    if g <= 1:
        return vector[:]
    return [v // g for v in vector]


def kernel_normal(rows: Matrix) -> list[int]:
    """Integer normal vector of the hyperplane spanned by (k-1) rows in R^k.

    Components are signed maximal minors (generalized cross product); the
    result is content-reduced.
    """
    k = len(rows) + 1
    normal = []
    for i in range(k):
        minor = [[row[j] for j in range(k) if j != i] for row in rows]
        normal.append((-1) ** i * det(minor))
    return content_reduce(normal)
