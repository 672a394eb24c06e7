"""Catalan numbers and the Catalan generating function."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .xseries import XSeries

_cache = [1]


def catalan_number(n: int) -> int:
    """n-th Catalan number, grown by the convolution recurrence."""
    if n < 0:
        raise ValueError("catalan_number needs n >= 0")
    while len(_cache) <= n:
        m = len(_cache) - 1
        _cache.append(sum(_cache[k] * _cache[m - k] for k in range(m + 1)))
    return _cache[n]


def catalan_series(order: int) -> XSeries:
    """C(x) = sum C_n x^n, exact through ``x^order``."""
    return XSeries.from_list([catalan_number(n) for n in range(order + 1)], order)


def ending_count(n: int, i: int) -> int:
    """Number of Catalan words of length ``n`` whose last letter is ``i``."""
    if not 1 <= i <= n:
        return 0
    v = Fraction(i, 2 * n - i) * comb(2 * n - i, n)
    assert v.denominator == 1
    return int(v)
