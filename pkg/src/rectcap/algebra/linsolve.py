"""Exact solution of the banded system arising for Catalan words ending low.

``solve_m_system`` evaluates the closed-form solution built from the Z
polynomials; ``gauss_solve`` is plain fraction-exact elimination and serves
as its independent check.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .xpoly import z_values

Number = int | Fraction


class SingularSystemError(ArithmeticError):
    pass


def m_matrix(r: int, x: Number, y: Number) -> list[list[Fraction]]:
    """The ``(r-1) x (r-1)`` coefficient matrix, rows and columns 1-based in the maths."""
    if r < 2:
        raise ValueError("m_matrix needs r >= 2")
    x, y = Fraction(x), Fraction(y)
    size = r - 1
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if j < size:
                if i == j:
                    v = 1 - x
                elif j > i or j == i - 1:
                    v = -x
                else:
                    v = Fraction(0)
            else:
                v = 1 - x * y if i == size else -x * y
            row.append(v)
        rows.append(row)
    return rows


def gauss_solve(m: Sequence[Sequence[Number]], beta: Sequence[Number]) -> list[Fraction]:
    n = len(m)
    if len(beta) != n or any(len(row) != n for row in m):
        raise ValueError("gauss_solve needs a square matrix and a matching vector")
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(m, beta)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise SingularSystemError(f"matrix is singular (column {col + 1})")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col] / p
                a[i] = [u - f * w for u, w in zip(a[i], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def mat_vec(m: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def solve_m_system(r: int, x: Number, y: Number, beta: Sequence[Number]) -> list[Fraction]:
    """Closed-form solution ``c`` of ``M c = beta`` at a rational point."""
    if r < 2:
        raise ValueError("solve_m_system needs r >= 2")
    if len(beta) != r - 1:
        raise ValueError(f"beta must have length {r - 1}")
    x, y = Fraction(x), Fraction(y)
    beta = [Fraction(b) for b in beta]
    z = z_values(r, x)
    for i in range(2, r + 1):
        if z[i] == 0:
            raise SingularSystemError(f"Z_{i}({x}) vanishes")
    last = z[r] - x * y * z[r - 1]
    if last == 0:
        raise SingularSystemError(f"Z_r - x*y*Z_(r-1) vanishes at x={x}, y={y}")

    # gamma_i = x^i / Z_{i+1} * sum_{j<=i} Z_{j+1} / x^j * beta_j, written without 1/x
    gamma = [Fraction(0)] * r
    for i in range(1, r):
        acc = sum((x ** (i - j) * z[j + 1] * beta[j - 1] for j in range(1, i + 1)), Fraction(0))
        gamma[i] = acc / z[i + 1]

    c = [Fraction(0)] * r
    c[r - 1] = z[r] / last * gamma[r - 1]
    for i in range(1, r - 1):
        v = z[i + 1] / z[i + 2] * gamma[i]
        v += sum((x * z[i] / z[j + 2] * gamma[j] for j in range(i + 1, r - 1)), Fraction(0))
        v += x * y * z[i] / last * gamma[r - 1]
        c[i] = v
    return c[1:]
