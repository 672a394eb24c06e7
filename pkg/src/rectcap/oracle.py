"""Brute-force reference distributions and totals.

Everything here enumerates the objects explicitly (through the kernels), so
it is independent of the generating-function code it is used to check.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from math import factorial
from typing import Sequence

from . import kernels
from .algebra import TPoly, catalan_number
from .bargraph import _rect

WORD_CAP = 20_000_000
CATALAN_CAP = 14
PERM_CAP = 8


class EnumerationCapError(ValueError):
    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: about {count} objects exceeds the enumeration cap {cap}")
        self.count = count
        self.cap = cap


def _poly(hist: Sequence[int]) -> TPoly:
    return TPoly.from_list(hist)


def _add_hists(hists) -> list[int]:
    out: list[int] = []
    for h in hists:
        if len(h) > len(out):
            out.extend([0] * (len(h) - len(out)))
        for i, c in enumerate(h):
            out[i] += c
    return out


def _word_hist(n: int, lo: int, hi: int, r: int, s: int, workers: int) -> list[int]:
    count = (hi - lo + 1) ** n
    if count > WORD_CAP:
        raise EnumerationCapError(f"words of length {n} over [{lo},{hi}]", count, WORD_CAP)
    if workers <= 1 or n == 0:
        return kernels.hist_words(n, lo, hi, r, s)
    prefixes = [(c,) for c in range(lo, hi + 1)]
    with ThreadPoolExecutor(workers) as pool:
        parts = pool.map(lambda p: kernels.hist_words(n, lo, hi, r, s, p), prefixes)
        return _add_hists(parts)


def dist_words_brute(n: int, k: int, r: int, s: int, *, workers: int = 1) -> TPoly:
    """``sum t^rc(w)`` over ``[k]^n``."""
    r, s = _rect((r, s))
    return _poly(_word_hist(n, 1, k, r, s, workers))


def dist_words_min_brute(n: int, k: int, m: int, r: int, s: int, *, workers: int = 1) -> TPoly:
    """Same as :func:`dist_words_brute` restricted to words with every letter ``>= m``."""
    if not 1 <= m <= k:
        raise ValueError(f"need 1 <= m <= k, got m={m}, k={k}")
    r, s = _rect((r, s))
    return _poly(_word_hist(n, m, k, r, s, workers))


def _catalan_hist(n: int, r: int, s: int) -> list[list[int]]:
    if n > CATALAN_CAP:
        raise EnumerationCapError(f"Catalan words of length {n}", catalan_number(n), catalan_number(CATALAN_CAP))
    r, s = _rect((r, s))
    return kernels.hist_catalan(n, r, s)


def dist_catalan_by_last(n: int, r: int, s: int) -> dict[int, TPoly]:
    """Distribution split by the last letter (key 0 holds the empty word)."""
    return {i: _poly(h) for i, h in enumerate(_catalan_hist(n, r, s)) if h}


def dist_catalan_brute(n: int, r: int, s: int) -> TPoly:
    return _poly(_add_hists(_catalan_hist(n, r, s)))


def dist_catalan_ending_brute(n: int, i: int, r: int, s: int) -> TPoly:
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return _poly(_catalan_hist(n, r, s)[i])


def dist_perms_brute(n: int, r: int, s: int) -> TPoly:
    if n > PERM_CAP:
        raise EnumerationCapError(f"permutations of [{n}]", factorial(n), factorial(PERM_CAP))
    r, s = _rect((r, s))
    return _poly(kernels.hist_perms(n, r, s))


def total_brute(dist: TPoly) -> int:
    """Total number of rectangles: the t-derivative at ``t = 1``."""
    return dist.ddt_eval_t1()


def total_perms_brute(n: int, r: int, s: int) -> int:
    return total_brute(dist_perms_brute(n, r, s))
