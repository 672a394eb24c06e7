"""Laurent polynomials in the marker variable ``t`` with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = int
_Coerce = Union["TPoly", int]


class TPoly:
    """Immutable Laurent polynomial ``sum c_m t^m`` with exact ``int`` coefficients.

    Zero coefficients are never stored, so two equal polynomials always have
    identical term dictionaries.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("TPoly exponents and coefficients must be int")
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> TPoly:
        return cls({0: c}) if c else ZERO

    @classmethod
    def monomial(cls, c: int, e: int) -> TPoly:
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> TPoly:
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls((low + i, c) for i, c in enumerate(coeffs))

    @staticmethod
    def coerce(v: _Coerce) -> TPoly:
        if isinstance(v, TPoly):
            return v
        if isinstance(v, int):
            return TPoly.const(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to TPoly")

    # --- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exp(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_unit_monomial(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_distribution(self) -> bool:
        """True if only nonnegative exponents with nonnegative coefficients occur."""
        return all(e >= 0 and c > 0 for e, c in self._terms.items())

    def dense(self) -> list[int]:
        """Coefficients of ``t^0 .. t^max``; requires nonnegative exponents."""
        if not self._terms:
            return []
        if self.min_exp < 0:
            raise ValueError("dense() needs nonnegative exponents")
        out = [0] * (self.max_exp + 1)
        for e, c in self._terms.items():
            out[e] = c
        return out

    # --- evaluation -----------------------------------------------------
    def eval_t1(self) -> int:
        return sum(self._terms.values())

    def ddt_eval_t1(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def shift_t(self, m: int) -> TPoly:
        """Multiply by ``t**m``."""
        if m == 0:
            return self
        return TPoly({e + m: c for e, c in self._terms.items()})

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other: _Coerce) -> TPoly:
        if not isinstance(other, (TPoly, int)):
            return NotImplemented
        other = TPoly.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: _Coerce) -> TPoly:
        if not isinstance(other, (TPoly, int)):
            return NotImplemented
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other: _Coerce) -> TPoly:
        if not isinstance(other, (TPoly, int)):
            return NotImplemented
        return TPoly.coerce(other) - self

    def __mul__(self, other: _Coerce) -> TPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return TPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for unit monomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- comparison / display ------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"TPoly({self.items()!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text


ZERO = TPoly()
ONE = TPoly({0: 1})
T = TPoly({1: 1})
