"""Exact linear algebra: fraction-free elimination and polynomial determinants.

Rank and determinant computations run over arbitrary-precision integers
(Bareiss elimination, whose interior divisions are exact).  Determinants of
matrices with polynomial entries are recovered by evaluating at enough
integer points and interpolating, which keeps all arithmetic in the integers
until the final exact interpolation step.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence

from .exact import Polynomial


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix via fraction-free Gaussian elimination."""
    m = [[int(x) for x in row] for row in matrix]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == n_rows:
            break
    return r


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix, fraction-free."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix of Fractions: clear denominators per row, then Bareiss."""
    cleared: List[List[int]] = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        denom = lcm(*(c.denominator for c in row)) if row else 1
        cleared.append([int(c * denom) for c in row])
    return bareiss_rank(cleared)


def poly_matrix_rank_at(matrix: Sequence[Sequence[Polynomial]], point) -> int:
    """Rank of a polynomial matrix after evaluating the variable at a point."""
    values = [[entry(point) for entry in row] for row in matrix]
    return rational_rank(values)


def poly_det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square matrix of integer-coefficient polynomials.

    Evaluates at integer nodes 0..D (D = a degree bound from row maxima) and
    Lagrange-interpolates.  The evaluations are plain integer determinants.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    var = matrix[0][0].var
    bound = sum(max((e.degree for e in row), default=0) for row in matrix)
    nodes = list(range(bound + 1))
    values = []
    for t in nodes:
        numeric = [[entry(t) for entry in row] for row in matrix]
        ints = []
        for row in numeric:
            if any(c.denominator != 1 for c in row):
                raise ValueError("poly_det expects integer-coefficient entries")
            ints.append([c.numerator for c in row])
        values.append(bareiss_det(ints))
    return _lagrange_interpolate(var, nodes, values)


def _lagrange_interpolate(var: str, nodes: Sequence[int], values: Sequence[int]) -> Polynomial:
    result = Polynomial.zero(var)
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        if yi == 0:
            continue
        basis = Polynomial.one(var)
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = basis * Polynomial(var, (-xj, 1))
            denom *= xi - xj
        result = result + basis.scale(Fraction(yi) / denom)
    return result


def poly_bareiss_det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Bareiss determinant directly over the polynomial ring (cross-check path).

    Slower than interpolation but wholly independent of it; interior divisions
    are exact polynomial divisions.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    var = matrix[0][0].var
    m = [list(row) for row in matrix]
    sign = 1
    prev = Polynomial.one(var)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot is None:
                return Polynomial.zero(var)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = Polynomial.zero(var)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det
