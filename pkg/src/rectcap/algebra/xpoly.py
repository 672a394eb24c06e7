"""Integer polynomials in ``x``: the Z_n family and Chebyshev U_n."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .xseries import XSeries


class XPoly:
    """Dense integer polynomial ``sum c_i x^i``; trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls, power: int = 1, c: int = 1) -> XPoly:
        return cls([0] * power + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other) -> XPoly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> XPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> XPoly:
        return _lift(other) - self

    def __mul__(self, other) -> XPoly:
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> XPoly:
        out = XPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = XPoly([other])
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for ``int`` and ``Fraction`` arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_series(self, order: int | None = None) -> XSeries:
        return XSeries.from_list(self.coeffs, order)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                parts.append(str(c))
            elif abs(c) == 1:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(v) -> XPoly:
    if isinstance(v, XPoly):
        return v
    if isinstance(v, int):
        return XPoly([v])
    raise TypeError(f"cannot coerce {type(v).__name__} to XPoly")


@lru_cache(maxsize=None)
def z_poly(n: int) -> XPoly:
    """Z_0 = 0, Z_1 = Z_2 = 1 and Z_n = Z_{n-1} - x*Z_{n-2}."""
    if n < 0:
        raise ValueError("z_poly needs n >= 0")
    if n == 0:
        return XPoly()
    if n <= 2:
        return XPoly([1])
    return z_poly(n - 1) - XPoly.x() * z_poly(n - 2)


@lru_cache(maxsize=None)
def chebyshev_u(n: int) -> XPoly:
    """Chebyshev polynomial of the second kind; U_{-1} = 0."""
    if n < -1:
        raise ValueError("chebyshev_u needs n >= -1")
    if n == -1:
        return XPoly()
    if n == 0:
        return XPoly([1])
    if n == 1:
        return XPoly([0, 2])
    return XPoly.x(1, 2) * chebyshev_u(n - 1) - chebyshev_u(n - 2)


def z_values(r: int, x: Fraction) -> Sequence[Fraction]:
    """``[Z_0(x), ..., Z_r(x)]`` evaluated exactly."""
    return [Fraction(z_poly(i)(x)) for i in range(r + 1)]
