"""Exact linear algebra over the rationals and over Q[z]."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .poly import ONE, ZERO, RationalPoly

Matrix = list[list[Fraction]]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free (Bareiss) elimination after clearing denominators."""
    m = _integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            m[i] = [(p * m[i][j] - f * m[r][j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def rref(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """Reduced row echelon form with zero rows dropped."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return m[:r]


def solve(a: Matrix, b: Matrix) -> Matrix:
    """X with A·X = B for square invertible A."""
    n = len(a)
    aug = [list(map(Fraction, a[i])) + list(map(Fraction, b[i])) for i in range(n)]
    red = rref(aug)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
            for i in range(len(a))]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def poly_det(m: Sequence[Sequence[RationalPoly]]) -> RationalPoly:
    """Determinant of a square matrix over Q[z] by Bareiss elimination.

    Each Bareiss step divides exactly by the previous pivot.
    """
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return ONE
    sign, prev = 1, ONE
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det * sign
