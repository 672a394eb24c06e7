"""Generating functions for rectangle capacity over words ``[k]^n``."""
from __future__ import annotations

from ..algebra import ONE, T, XSeries
from ._common import MARGIN, X, check_distribution, geo, tpow


def _alpha(k: int, s: int) -> XSeries:
    """Building block ``(1-(kx)^s)/(1-kx) - (1-(ktx)^s)/(t^{s-1}(1-ktx)) - 1/(t^s x)``."""
    return (geo(k, s)
            - geo(T * k, s) * tpow(1 - s)
            - XSeries.monomial(tpow(-s), -1))


def _a1(s: int, order: int) -> XSeries:
    numer = ONE - XSeries({n: T - 1 for n in range(1, s)})
    return numer * (ONE - X * T).invert(order)


def _continued_fraction(k: int, s: int, order: int, lead_over_x: bool = True) -> XSeries:
    """Evaluate the 1 x s continued fraction bottom-up.

    ``lead_over_x`` selects the reading ``1/(t^s x)`` of the leading
    numerator; ``False`` gives ``x/t^s``, kept only to show it is wrong.
    """
    tail = (X * _a1(s, order).scale_x(k - 1)).shift_t(k - 1)
    denom = ONE - tail
    for j in range(k - 2, 0, -1):
        level = (X * _alpha(k - j, s).scale_x(j)).shift_t(j)
        denom = ONE - level - denom.invert(order) * tpow(-s)
    lead = XSeries.monomial(tpow(-s), -1 if lead_over_x else 1)
    return _alpha(k, s) + lead * denom.invert(order)


def gf_words_1xs(k: int, s: int, order: int, *, check: bool = True) -> XSeries:
    """``A_k(x,t)`` for ``1 x s`` rectangles, exact through ``x^order``."""
    if k < 1 or s < 1 or order < 0:
        raise ValueError("gf_words_1xs needs k >= 1, s >= 1, order >= 0")
    work = order + MARGIN
    if k == 1:
        res = _a1(s, work)
    else:
        res = _continued_fraction(k, s, work)
    res = res.truncate(order)
    return check_distribution(res, lambda n: k ** n) if check else res


def _mixed(a: int, b: int, s: int) -> int:
    """``b^{s-1} * sum_{j<s-1} (a/b)^j`` simplified to an integer."""
    return sum(a ** j * b ** (s - 1 - j) for j in range(s - 1))


def _mobius_step(prev: XSeries, top: int, low: int, mult: int, s: int, order: int) -> XSeries:
    """One alphabet-extension step shared by the ``>= r-1`` restricted class and the full ``r >= 2`` class.

    ``top`` is the number of available letters, ``low = top - ...`` the base of
    the inner sums and ``mult`` the (r-1) weight (1 for the restricted class).
    """
    f = prev.scale_x(1)
    inv_ts1 = tpow(1 - s)
    bracket = geo(low, s - 1) - XSeries.monomial(_mixed(low, top, s), s - 1)
    beta = (geo(top, s)
            - geo(T * low, s) * inv_ts1
            - X * mult * (ONE - X * top).invert(order) * bracket)
    delta = (ONE
             - X * mult * geo(low, s - 1)
             + X * mult * geo(T * low, s - 1) * inv_ts1)
    gamma = X * (-mult) * inv_ts1
    return (f * inv_ts1 + beta) * (gamma * f + delta).invert(order)


def gf_words_min(k: int, r: int, s: int, order: int, *, check: bool = True) -> XSeries:
    """``A^{>=r-1}_k(x,t)``: words over ``[k]`` with every letter at least ``r-1``.

    For ``r = 1`` the restriction is vacuous and this is ``gf_words(k, 1, s)``.
    """
    if r < 1 or s < 1 or order < 0:
        raise ValueError("gf_words_min needs r >= 1, s >= 1, order >= 0")
    if r == 1:
        return gf_words_1xs(k, s, order, check=check)
    if k < r - 1:
        raise ValueError(f"gf_words_min needs k >= r-1, got k={k}, r={r}")
    res = _words_min(k, r, s, order + MARGIN).truncate(order)
    return check_distribution(res, lambda n: (k - r + 2) ** n) if check else res


def _words_min(k: int, r: int, s: int, work: int) -> XSeries:
    series = (ONE - X).invert(work)
    for kk in range(r, k + 1):
        series = _mobius_step(series, kk - r + 2, kk - r + 1, 1, s, work)
    return series


def gf_words(k: int, r: int, s: int, order: int, *, check: bool = True) -> XSeries:
    """``A_k(x,t)`` for ``r x s`` rectangles over ``[k]^n``, exact through ``x^order``."""
    if r < 1 or s < 1 or order < 0:
        raise ValueError("gf_words needs r >= 1, s >= 1, order >= 0")
    if r > k:
        raise ValueError(f"gf_words is only defined for r <= k (got r={r}, k={k})")
    if r == 1:
        return gf_words_1xs(k, s, order, check=check)
    work = order + MARGIN
    prev = _words_min(k - 1, r, s, work)
    res = _mobius_step(prev, k, k - r + 1, r - 1, s, work).truncate(order)
    return check_distribution(res, lambda n: k ** n) if check else res


def power_sum(lo: int, hi: int, p: int) -> int:
    return sum(j ** p for j in range(lo, hi + 1))


def total_words(n: int, k: int, r: int, s: int) -> int:
    """Total number of ``r x s`` rectangles over all words of ``[k]^n``."""
    if min(k, r, s) < 1 or n < 0:
        raise ValueError("total_words needs n >= 0 and k, r, s >= 1")
    if n < s:
        return 0
    return (n - s + 1) * k ** (n - s) * power_sum(1, k - r + 1, s)


def gf_total_words(k: int, r: int, s: int, order: int) -> XSeries:
    """``x^s * sum_{j<=k-r+1} j^s / (1-kx)^2``."""
    c = power_sum(1, k - r + 1, s)
    return XSeries.monomial(c, s) * ((ONE - X * k) ** 2).invert(order)
