"""Exact checks of the combinatorial identities the generating functions rely on."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .algebra import XPoly, catalan_number, chebyshev_u, z_poly
from .report import Check

SUITE = "identities"


@dataclass(frozen=True)
class IdentityBounds:
    k_max: int = 5
    s_max: int = 4
    r_max: int = 5
    n_max: int = 20
    z_r_max: int = 12
    zu_n_max: int = 12


def window_capacity_sum(k: int, r: int, s: int) -> int:
    """``sum over [k]^s of max(min - r + 1, 0)`` by enumeration."""
    return sum(max(min(t) - r + 1, 0) for t in itertools.product(range(1, k + 1), repeat=s))


def min_sum(r: int, s: int) -> int:
    """``sum over [s]^r of min`` by enumeration."""
    return sum(min(t) for t in itertools.product(range(1, s + 1), repeat=r))


def ballot(n: int, k: int) -> Fraction:
    return Fraction(k, 2 * n - k) * comb(2 * n - k, n)


def _x() -> XPoly:
    return XPoly.x()


def z_identity_sum(r: int) -> tuple[XPoly, XPoly]:
    x = _x()
    lhs = x * x * sum((z_poly(k) * (k + 1) for k in range(1, r + 1)), XPoly())
    rhs = 1 - x * z_poly(r + 2) * (r + 1) - z_poly(r + 3)
    return lhs, rhs


def z_identity_telescoping(r: int, k: int) -> tuple[XPoly, XPoly]:
    """``sum_{j=k+1}^r x^{j-k-1}/(Z_{j+1}Z_{j+2}) = Z_{r-k}/(Z_{k+2}Z_{r+2})`` times all denominators."""
    x = _x()
    js = list(range(k + 1, r + 1))
    dens = {j: z_poly(j + 1) * z_poly(j + 2) for j in js}
    lhs = XPoly()
    for j in js:
        others = prod((dens[i] for i in js if i != j), start=XPoly([1]))
        lhs = lhs + x ** (j - k - 1) * others * z_poly(k + 2) * z_poly(r + 2)
    rhs = z_poly(r - k) * prod(dens.values(), start=XPoly([1]))
    return lhs, rhs


def z_identity_weighted(r: int) -> tuple[XPoly, XPoly]:
    """Third induction identity, multiplied through by ``prod Z_{k+2}``."""
    x = _x()
    ks = list(range(1, r - 1))
    dens = {k: z_poly(k + 2) for k in ks}
    full = prod(dens.values(), start=XPoly([1]))
    lhs = XPoly()
    for k in ks:
        others = prod((dens[i] for i in ks if i != k), start=XPoly([1]))
        term = x ** (k + 1) * (z_poly(r) + x * x * z_poly(k) * z_poly(r - k - 2)) * (k + 1)
        lhs = lhs + term * others
    rhs = (z_poly(r - 1) - (1 + x) * z_poly(r) + x ** (r - 1)) * full
    return lhs, rhs


def check_identities(bounds: IdentityBounds = IdentityBounds()) -> list[Check]:
    checks: list[Check] = []

    def record(name, ok, params, expected=None, actual=None):
        checks.append(Check(SUITE, name, ok, params, expected, actual))

    for k in range(1, bounds.k_max + 1):
        for s in range(1, bounds.s_max + 1):
            for r in range(1, bounds.r_max + 1):
                lhs = window_capacity_sum(k, r, s)
                rhs = sum(j ** s for j in range(1, k - r + 2))
                record("window-capacity-sum", lhs == rhs, {"k": k, "r": r, "s": s}, rhs, lhs)
    for r in range(1, bounds.r_max + 1):
        for s in range(1, bounds.s_max + 1):
            lhs = min_sum(r, s)
            rhs = sum(j ** r for j in range(1, s + 1))
            record("min-power-sum", lhs == rhs, {"r": r, "s": s}, rhs, lhs)
    for n in range(1, bounds.n_max + 1):
        for i in range(1, n + 1):
            lhs = sum((ballot(n, k) for k in range(i, n + 1)), Fraction(0))
            rhs = Fraction(i + 1, 2 * n + 1 - i) * comb(2 * n + 1 - i, n + 1)
            record("ballot-tail-sum", lhs == rhs, {"n": n, "i": i}, rhs, lhs)
        lhs = sum((Fraction(k * k, 2 * n - k) * comb(2 * n - k, n) for k in range(1, n + 1)), Fraction(0))
        rhs = catalan_number(n + 1) - catalan_number(n)
        record("squared-ballot-sum", lhs == rhs, {"n": n}, rhs, lhs)
    for n in range(0, bounds.n_max + 1):
        rhs = sum(catalan_number(k) * catalan_number(n - k) for k in range(n + 1))
        record("catalan-convolution", catalan_number(n + 1) == rhs, {"n": n}, rhs, catalan_number(n + 1))
    for r in range(3, bounds.z_r_max + 1):
        lhs, rhs = z_identity_sum(r)
        record("z-weighted-sum", lhs == rhs, {"r": r}, str(rhs), str(lhs))
        for k in range(0, r):
            lhs, rhs = z_identity_telescoping(r, k)
            record("z-telescoping", lhs == rhs, {"r": r, "k": k}, str(rhs), str(lhs))
        lhs, rhs = z_identity_weighted(r)
        record("z-ratio-sum", lhs == rhs, {"r": r}, str(rhs), str(lhs))
    for n in range(1, bounds.zu_n_max + 1):
        for q in (Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-3, 2)):
            lhs = z_poly(n)(q * q)
            rhs = q ** (n - 1) * chebyshev_u(n - 1)(1 / (2 * q))
            record("z-chebyshev-link", lhs == rhs, {"n": n, "q": str(q)}, rhs, lhs)
    return checks
