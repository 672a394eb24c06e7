"""Closed-form totals over Catalan words and permutations, plus stated variants.

The series product ``G(x) (C(x) - 1)^{r-1}`` is the reference for Catalan
totals.  ``eval_r22`` and ``example_r2s1`` evaluate alternative closed forms term
by term so that their index conventions can be compared with brute force.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..algebra import ONE, XSeries, catalan_series
from .catalan import gf_catalan_1xs


class NonIntegralResult(ArithmeticError):
    pass


def _as_int(v: Fraction, what: str) -> int:
    if v.denominator != 1:
        raise NonIntegralResult(f"{what} evaluated to the non-integer {v}")
    return int(v)


def _pp1(n: int, s: int) -> Fraction:
    acc = sum((Fraction(s - 1 - i, i + 1) * comb(2 * i, i) * comb(2 * n - 2 * i, n - i)
               for i in range(s - 1)), Fraction(0))
    return (acc - (2 * s - 1) * comb(2 * n, n) + 4 ** n) / 2


def total_catalan_1xs(n: int, s: int) -> int:
    """Total number of ``1 x s`` rectangles over Catalan words of length ``n``.

    The closed form holds for ``n >= s-1``; shorter words hold no rectangle.
    """
    if s < 1 or n < 0:
        raise ValueError("total_catalan_1xs needs s >= 1, n >= 0")
    if n < s - 1:
        return 0
    return _as_int(_pp1(n, s), f"g_{n} (s={s})")


def gf_total_catalan_1xs(s: int, order: int) -> XSeries:
    """``G(x)``: t-derivative at ``t=1`` of ``P(x,t)``."""
    return gf_catalan_1xs(s, order, check=False).ddt_t1()


def gf_total_catalan(r: int, s: int, order: int) -> XSeries:
    """``G(x) * (C(x) - 1)^{r-1}`` through ``x^order``."""
    if r < 1 or s < 1 or order < 0:
        raise ValueError("gf_total_catalan needs r, s >= 1 and order >= 0")
    g = gf_total_catalan_1xs(s, order)
    return (g * (catalan_series(order) - ONE) ** (r - 1)).truncate(order)


def total_catalan(n: int, r: int, s: int) -> int:
    return gf_total_catalan(r, s, n).coeff(n)[0]


def eval_r22(n: int, r: int, s: int, *, repaired: bool = False) -> Fraction:
    """The stated double sum for the ``r x s`` Catalan total.

    ``repaired=False`` keeps the stated ``4^{n+1}`` inside the sum over ``k``;
    ``repaired=True`` uses ``4^{n+1-k}``, matching the companion binomials.
    """
    if r < 2 or s < 1:
        raise ValueError("eval_r22 needs r >= 2, s >= 1")
    total = Fraction(0)
    for k in range(r, n + 2 - s):
        m = n + 1 - k
        inner = sum((Fraction(s - 1 - i, i + 1) * comb(2 * i, i) * comb(2 * m - 2 * i, m - i)
                     for i in range(s - 1)), Fraction(0))
        inner += -(2 * s - 1) * comb(2 * m, m) + 4 ** (m if repaired else n + 1)
        total += Fraction(r - 1, k + r - 2) * comb(2 * k - 3, k - r) * inner
    return total


def example_r2s1(n: int) -> int:
    """``binom(2n+1, n) - binom(2n+3, n+1) + 2*4^n``, stated for ``r=2, s=1``."""
    return comb(2 * n + 1, n) - comb(2 * n + 3, n + 1) + 2 * 4 ** n


def c_minus_one_power_stated(r: int, order: int) -> XSeries:
    """The stated expansion ``2(r-1) x^r sum_n binom(2n+2r-3, n)/(n+2r-2) x^n``.

    Kept for comparison only; it equals ``x (C(x)-1)^{r-1}``, not ``(C(x)-1)^{r-1}``.
    """
    if r < 2:
        raise ValueError("needs r >= 2")
    terms = {}
    for n in range(order - r + 1):
        v = Fraction(2 * (r - 1), n + 2 * (r - 1)) * comb(2 * n + 2 * (r - 1) - 1, n)
        terms[n + r] = _as_int(v, "(C-1)^(r-1) expansion term")
    return XSeries(terms, order)


def total_perms(n: int, r: int, s: int) -> int:
    """Total number of ``r x s`` rectangles over all permutations of ``[n]``."""
    if n < 1 or r < 1 or s < 1:
        raise ValueError("total_perms needs n, r, s >= 1")
    top = n - r + 2
    if top < s + 1:
        return 0
    v = Fraction(factorial(n + 1) * comb(top, s + 1), comb(n + 1, s))
    return _as_int(v, f"permutation total (n={n}, r={r}, s={s})")
