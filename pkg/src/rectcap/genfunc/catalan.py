"""Generating functions for rectangle capacity over Catalan words."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..algebra import ONE, TPoly, XSeries, catalan_number, catalan_series, z_poly
from ..algebra.tpoly import ZERO
from ._common import X, check_distribution, tpow


def p_coefficients(s: int, order: int) -> list[TPoly]:
    """``p_0 .. p_order`` for ``1 x s`` rectangles, by the last-1 decomposition.

    A word with its rightmost ``1`` at position ``i`` splits into a Catalan
    word of length ``i-1`` and a raised Catalan word of length ``n-i``.
    """
    p: list[TPoly] = []
    for n in range(order + 1):
        if n < s:
            p.append(TPoly.const(catalan_number(n)))
            continue
        acc = ZERO
        for i in range(1, s):
            acc = acc + (p[i - 1] * p[n - i]).shift_t(n - s + 1)
        for i in range(s, n + 1):
            acc = acc + (p[i - 1] * p[n - i]).shift_t(n - i + 1)
        p.append(acc)
    return p


def functional_equation_sides(p_series: XSeries, s: int, *, stated_sign: bool = False) -> tuple[XSeries, XSeries]:
    """Both sides of ``P(x,t)(1 - txP(tx,t)) = alpha + beta*txP(tx,t)``.

    The double sum in ``alpha`` enters with a minus sign; at ``t = 1`` this
    is what makes ``P(x,1)(1 - xP(x,1)) = 1``.  ``stated_sign=True`` uses the
    plus sign instead, which leaves a nonzero residual for ``s >= 2``.
    """
    order = p_series.order
    sign = 1 if stated_sign else -1
    txp = (X * p_series.scale_x(1)).shift_t(1)
    alpha = XSeries({n: catalan_number(n) for n in range(s)})
    for i in range(s - 1):
        ci = catalan_number(s - 2 - i)
        for n in range(i + 1):
            # -C_{s-2-i} C_n (tx)^{n-i} x^{s-1}
            alpha = alpha + XSeries.monomial(tpow(n - i) * (sign * ci * catalan_number(n)), s - 1 + n - i)
    beta = (-XSeries({n: catalan_number(n) for n in range(s - 1)})
            + XSeries({n: tpow(n + 1 - s) * catalan_number(n) for n in range(s - 1)}))
    lhs = p_series * (ONE - txp)
    rhs = alpha + beta * txp
    return lhs.truncate(order), rhs.truncate(order)


def functional_equation_residual(p_series: XSeries, s: int, *, stated_sign: bool = False) -> XSeries:
    lhs, rhs = functional_equation_sides(p_series, s, stated_sign=stated_sign)
    return lhs - rhs


def gf_catalan_1xs(s: int, order: int, *, check: bool = True) -> XSeries:
    """``P(x,t)``, exact through ``x^order``; the functional equation is re-checked."""
    if s < 1 or order < 0:
        raise ValueError("gf_catalan_1xs needs s >= 1, order >= 0")
    res = XSeries.from_list(p_coefficients(s, order), order)
    if check:
        if not functional_equation_residual(res, s).is_zero():
            raise ArithmeticError("P(x,t) violates its functional equation")
        check_distribution(res, catalan_number)
    return res


def _z(n: int) -> XSeries:
    return z_poly(n).to_series()


def gf_catalan(r: int, s: int, order: int, *, check: bool = True) -> XSeries:
    """``Q(x,t) = (Z_{r-1} - x Z_{r-2} P) / (Z_r - x Z_{r-1} P)``."""
    if r < 1 or s < 1 or order < 0:
        raise ValueError("gf_catalan needs r, s >= 1 and order >= 0")
    if r == 1:
        return gf_catalan_1xs(s, order, check=check)
    p = gf_catalan_1xs(s, order, check=False)
    num = _z(r - 1) - X * _z(r - 2) * p
    den = _z(r) - X * _z(r - 1) * p
    res = (num * den.invert(order)).truncate(order)
    return check_distribution(res, catalan_number) if check else res


def gf_catalan_ending(i: int, r: int, s: int, order: int, *, check: bool = True) -> XSeries:
    """``Q^{(=i)}(x,t)``: Catalan words ending in letter ``i``, for ``1 <= i <= r-1``."""
    if r < 2 or not 1 <= i <= r - 1:
        raise ValueError(f"gf_catalan_ending needs r >= 2 and 1 <= i <= r-1, got i={i}, r={r}")
    p = gf_catalan_1xs(s, order, check=False)
    den = (_z(r) - X * p * _z(r - 1)).invert(order)
    if i == r - 1:
        res = XSeries.monomial(ONE, r - 1) * den
    else:
        zi = _z(i)
        res = XSeries.monomial(ONE, i) * _z(i + 2).invert(order)
        for j in range(i + 1, r - 1):
            res = res + XSeries.monomial(ONE, j + 1) * zi * (_z(j + 1) * _z(j + 2)).invert(order)
        res = res + XSeries.monomial(ONE, r) * p * zi * _z(r).invert(order) * den
    res = res.truncate(order)
    return check_distribution(res, lambda n: ending_mass(n, i)) if check else res


def ending_mass(n: int, i: int) -> int:
    if not 1 <= i <= n:
        return 0
    v = Fraction(i, 2 * n - i) * comb(2 * n - i, n)
    return int(v)


def catalan_derivative_series(order: int) -> XSeries:
    """``C(x) / ((1 - xC(x))^2 - x)`` through ``x^order``."""
    c = catalan_series(order + 1)
    den = (ONE - X * c) ** 2 - X
    return (c * den.invert(order + 1)).truncate(order)
