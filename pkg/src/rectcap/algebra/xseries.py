"""Truncated Laurent series in ``x`` whose coefficients are :class:`TPoly`.

A series carries an ``order``: the largest x-exponent through which its
coefficients are exact.  ``order=None`` marks an exact finite expansion (a
polynomial in ``x`` and ``1/x``), which is how closed-form building blocks
enter the computations.  Every operation propagates the order so that a
result never claims more precision than its inputs support.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union

from .tpoly import ONE, ZERO, TPoly

_Scalar = Union[int, TPoly]


class SeriesError(ArithmeticError):
    """Raised for misuse such as inverting a non-unit leading coefficient."""


def _min_order(*orders):
    known = [o for o in orders if o is not None]
    return min(known) if known else None


class XSeries:
    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Mapping[int, _Scalar] | Iterable[tuple[int, _Scalar]] = (),
                 order: int | None = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, TPoly] = {}
        for n, v in items:
            if order is not None and n > order:
                continue
            v = TPoly.coerce(v)
            if n in c:
                v = c[n] + v
            if v:
                c[n] = v
            else:
                c.pop(n, None)
        self._c = c
        self.order = order

    # --- constructors ---------------------------------------------------
    @classmethod
    def from_list(cls, coeffs: Iterable[_Scalar], order: int | None = None, low: int = 0) -> XSeries:
        return cls(((low + i, v) for i, v in enumerate(coeffs)), order)

    @classmethod
    def monomial(cls, coeff: _Scalar, n: int, order: int | None = None) -> XSeries:
        return cls({n: coeff}, order)

    @classmethod
    def one(cls, order: int | None = None) -> XSeries:
        return cls({0: ONE}, order)

    @classmethod
    def geometric(cls, ratio: _Scalar, length: int, order: int | None = None) -> XSeries:
        """Finite sum ``sum_{j<length} (ratio*x)^j``."""
        ratio = TPoly.coerce(ratio)
        terms, p = {}, ONE
        for j in range(length):
            terms[j] = p
            p = p * ratio
        return cls(terms, order)

    # --- inspection -----------------------------------------------------
    @property
    def d_min(self) -> int | None:
        """Lowest x-exponent with a nonzero stored coefficient."""
        return min(self._c) if self._c else None

    @property
    def max_exp(self) -> int | None:
        return max(self._c) if self._c else None

    def _valuation(self) -> float:
        if self._c:
            return min(self._c)
        return float("inf") if self.order is None else self.order + 1

    def coeff(self, n: int) -> TPoly:
        if self.order is not None and n > self.order:
            raise SeriesError(f"coefficient x^{n} requested beyond truncation order {self.order}")
        return self._c.get(n, ZERO)

    def __getitem__(self, n: int) -> TPoly:
        return self.coeff(n)

    def items(self):
        return sorted(self._c.items())

    def coeffs(self, upto: int | None = None, start: int = 0) -> list[TPoly]:
        top = self.order if upto is None else upto
        if top is None:
            top = self.max_exp if self._c else start - 1
        return [self.coeff(n) for n in range(start, top + 1)]

    def ints(self, upto: int | None = None, start: int = 0) -> list[int]:
        """Integer coefficients of a t-free series."""
        out = []
        for p in self.coeffs(upto, start):
            if p and (len(p.terms) != 1 or p.min_exp != 0):
                raise SeriesError("ints() requires t-free coefficients")
            out.append(p[0])
        return out

    def is_zero(self) -> bool:
        return not self._c

    def t_exponent_range(self) -> tuple[int, int] | None:
        lo = [p.min_exp for p in self._c.values()]
        hi = [p.max_exp for p in self._c.values()]
        return (min(lo), max(hi)) if lo else None

    # --- arithmetic -----------------------------------------------------
    @staticmethod
    def _lift(v: XSeries | _Scalar) -> XSeries:
        if isinstance(v, XSeries):
            return v
        return XSeries({0: TPoly.coerce(v)})

    def __add__(self, other) -> XSeries:
        other = XSeries._lift(other)
        order = _min_order(self.order, other.order)
        out = dict(self._c)
        for n, v in other._c.items():
            out[n] = out[n] + v if n in out else v
        return XSeries(out, order)

    __radd__ = __add__

    def __neg__(self) -> XSeries:
        return XSeries({n: -v for n, v in self._c.items()}, self.order)

    def __sub__(self, other) -> XSeries:
        return self + (-XSeries._lift(other))

    def __rsub__(self, other) -> XSeries:
        return XSeries._lift(other) - self

    def __mul__(self, other) -> XSeries:
        if isinstance(other, (int, TPoly)):
            return XSeries({n: v * other for n, v in self._c.items()}, self.order)
        va, vb = self._valuation(), other._valuation()
        bounds = []
        if self.order is not None:
            bounds.append(self.order + vb)
        if other.order is not None:
            bounds.append(other.order + va)
        order = None
        if bounds:
            b = min(bounds)
            order = int(b) if b != float("inf") else None
        out: dict[int, TPoly] = {}
        for i, ai in self._c.items():
            for j, bj in other._c.items():
                n = i + j
                if order is not None and n > order:
                    continue
                out[n] = out[n] + ai * bj if n in out else ai * bj
        return XSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> XSeries:
        if n < 0:
            return self.invert() ** (-n)
        result = XSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self, order: int | None = None) -> XSeries:
        """Multiplicative inverse; the lowest coefficient must be ``±t^m``.

        ``order`` is mandatory when ``self`` is an exact finite expansion.
        """
        if not self._c:
            raise SeriesError("cannot invert the zero series")
        v = self.d_min
        lead = self._c[v]
        if not lead.is_unit_monomial():
            raise SeriesError(f"leading coefficient {lead} is not a unit monomial")
        (m, sign), = lead.items()
        lead_inv = TPoly({-m: sign})
        exact_through = None if self.order is None else self.order - 2 * v
        target = _min_order(exact_through, order)
        if target is None:
            raise SeriesError("inverting an exact expansion needs an explicit order")
        length = target + v  # number of terms of the unit part needed
        if length < 0:
            return XSeries({}, target)
        u = [self._c.get(v + j, ZERO) for j in range(length + 1)]
        b = [lead_inv]
        for n in range(1, length + 1):
            acc = ZERO
            for j in range(1, n + 1):
                if u[j]:
                    acc = acc + u[j] * b[n - j]
            b.append(-(acc * lead_inv))
        return XSeries(((n - v, bn) for n, bn in enumerate(b)), target)

    def __truediv__(self, other) -> XSeries:
        if isinstance(other, XSeries):
            # an exact divisor is inverted to the dividend's own order
            return self * other.invert(order=None if other.order is not None else self.order)
        other = TPoly.coerce(other)
        if not other.is_unit_monomial():
            raise SeriesError("can only divide by a unit monomial in t")
        (m, sign), = other.items()
        return self * TPoly({-m: sign})

    def __rtruediv__(self, other) -> XSeries:
        return XSeries._lift(other) * self.invert()

    # --- substitutions and derivatives ---------------------------------
    def scale_x(self, j: int) -> XSeries:
        """Substitute ``x -> t^j x``."""
        return XSeries({n: v.shift_t(j * n) for n, v in self._c.items()}, self.order)

    def shift_x(self, m: int) -> XSeries:
        """Multiply by ``x^m``."""
        order = None if self.order is None else self.order + m
        return XSeries({n + m: v for n, v in self._c.items()}, order)

    def shift_t(self, m: int) -> XSeries:
        return XSeries({n: v.shift_t(m) for n, v in self._c.items()}, self.order)

    def truncate(self, order: int) -> XSeries:
        if self.order is not None and order > self.order:
            raise SeriesError(f"cannot extend truncation order {self.order} to {order}")
        return XSeries(self._c, order)

    def eval_t1(self) -> XSeries:
        return XSeries({n: v.eval_t1() for n, v in self._c.items()}, self.order)

    def ddt_t1(self) -> XSeries:
        return XSeries({n: v.ddt_eval_t1() for n, v in self._c.items()}, self.order)

    def ddx(self) -> XSeries:
        order = None if self.order is None else self.order - 1
        return XSeries({n - 1: v * n for n, v in self._c.items() if n}, order)

    def map_coeffs(self, f) -> XSeries:
        return XSeries({n: f(v) for n, v in self._c.items()}, self.order)

    # --- comparison -----------------------------------------------------
    def agrees(self, other: XSeries, through: int) -> bool:
        """Coefficient-wise equality for every exponent ``<= through``."""
        other = XSeries._lift(other)
        for s in (self, other):
            if s.order is not None and s.order < through:
                raise SeriesError(f"series only exact through x^{s.order}")
        keys = {n for n in self._c if n <= through} | {n for n in other._c if n <= through}
        return all(self._c.get(n, ZERO) == other._c.get(n, ZERO) for n in keys)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"XSeries({self.items()!r}, order={self.order})"

    def __str__(self) -> str:
        parts = []
        for n, v in self.items():
            xs = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            coef = str(v)
            if len(v.terms) > 1:
                coef = f"({coef})"
            if not xs:
                parts.append(coef)
            elif coef == "1":
                parts.append(xs)
            else:
                parts.append(f"{coef}*{xs}")
        body = " + ".join(parts) if parts else "0"
        return body if self.order is None else f"{body} + O(x^{self.order + 1})"
