"""The two tables of totals (words, Catalan words) as closed-form expressions."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable


@dataclass(frozen=True)
class Row:
    key: tuple[int, ...]
    expression: str
    formula: Callable[[int], int]
    oeis: str | None
    n_min: int


def _half(v: int) -> int:
    assert v % 2 == 0
    return v // 2


# Table 1: total number of r x s rectangles over [k]^n, valid for n >= s.
TABLE1 = [
    Row((2, 1, 1), "3n2^(n-1)", lambda n: 3 * n * 2 ** (n - 1), "A167667", 1),
    Row((2, 1, 2), "5(n-1)2^(n-2)", lambda n: 5 * (n - 1) * 2 ** (n - 2), None, 2),
    Row((2, 1, 3), "9(n-2)2^(n-3)", lambda n: 9 * (n - 2) * 2 ** (n - 3), None, 3),
    Row((2, 2, 1), "n2^(n-1)", lambda n: n * 2 ** (n - 1), "A001787", 1),
    Row((2, 2, 2), "(n-1)2^(n-2)", lambda n: (n - 1) * 2 ** (n - 2), "A001787", 2),
    Row((2, 2, 3), "(n-2)2^(n-3)", lambda n: (n - 2) * 2 ** (n - 3), "A001787", 3),
    Row((3, 1, 1), "6n3^(n-1)", lambda n: 6 * n * 3 ** (n - 1), None, 1),
    Row((3, 1, 2), "14(n-1)3^(n-2)", lambda n: 14 * (n - 1) * 3 ** (n - 2), None, 2),
    Row((3, 1, 3), "36(n-2)3^(n-3)", lambda n: 36 * (n - 2) * 3 ** (n - 3), None, 3),
    Row((3, 2, 1), "n3^n", lambda n: n * 3 ** n, "A036290", 1),
    Row((3, 2, 2), "5(n-1)3^(n-2)", lambda n: 5 * (n - 1) * 3 ** (n - 2), None, 2),
    Row((3, 2, 3), "(n-2)3^(n-1)", lambda n: (n - 2) * 3 ** (n - 1), None, 3),
    Row((3, 3, 1), "n3^(n-1)", lambda n: n * 3 ** (n - 1), "A027471", 1),
    Row((3, 3, 2), "(n-1)3^(n-2)", lambda n: (n - 1) * 3 ** (n - 2), "A027471", 2),
    Row((3, 3, 3), "(n-2)3^(n-3)", lambda n: (n - 2) * 3 ** (n - 3), "A027471", 3),
]

# Table 2: total number of 1 x s rectangles over Catalan words, valid for n >= s-1.
TABLE2 = [
    Row((1,), "(4^n - binom(2n,n))/2", lambda n: _half(4 ** n - comb(2 * n, n)), "A000346", 0),
    Row((2,), "(4^n - 2binom(2n,n))/2", lambda n: _half(4 ** n - 2 * comb(2 * n, n)), None, 1),
    Row((3,), "(binom(2n-2,n-1) - 3binom(2n,n) + 4^n)/2",
        lambda n: _half(comb(2 * n - 2, n - 1) - 3 * comb(2 * n, n) + 4 ** n), None, 2),
]
