from __future__ import annotations

from ..algebra import ONE, T, TPoly, XSeries

X = XSeries.monomial(ONE, 1)

# Extra working precision: the continued fraction divides by x once per level.
MARGIN = 2


class NotADistributionError(ValueError):
    pass


def tpow(m: int) -> TPoly:
    return TPoly({m: 1})


def geo(ratio, length: int) -> XSeries:
    """Exact finite sum ``sum_{j<length} (ratio*x)^j``; empty when ``length <= 0``."""
    return XSeries.geometric(ratio, max(length, 0))


def check_distribution(series: XSeries, masses=None) -> XSeries:
    """Validate a public generating function of distribution polynomials.

    ``masses``, if given, maps ``n`` to the expected object count ``p(1)``.
    """
    dmin = series.d_min
    if dmin is not None and dmin < 0:
        raise NotADistributionError(f"negative x-exponent {dmin} survived")
    for n, p in series.items():
        if not p.is_distribution():
            raise NotADistributionError(f"coefficient of x^{n} is not a distribution: {p}")
    if masses is not None:
        for n in range(series.order + 1):
            if series.coeff(n).eval_t1() != masses(n):
                raise NotADistributionError(f"coefficient of x^{n} has mass "
                                            f"{series.coeff(n).eval_t1()}, expected {masses(n)}")
    return series


__all__ = ["X", "MARGIN", "T", "ONE", "NotADistributionError", "tpow", "geo", "check_distribution"]
