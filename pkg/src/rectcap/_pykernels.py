"""Pure-Python enumeration kernels (fallback for the compiled ``_ckernels``).

Each ``hist_*`` function enumerates a class of words and returns the
histogram ``h`` with ``h[m]`` = number of words whose rectangle capacity is
``m``.  Both backends expose exactly the same functions.
"""
from __future__ import annotations

import itertools
from typing import Sequence


def rc(w: Sequence[int], r: int, s: int) -> int:
    total = 0
    for i in range(len(w) - s + 1):
        h = min(w[i:i + s]) - r + 1
        if h > 0:
            total += h
    return total


def _dense(counts: dict[int, int]) -> list[int]:
    if not counts:
        return []
    out = [0] * (max(counts) + 1)
    for m, c in counts.items():
        out[m] = c
    return out


def hist_words(n: int, lo: int, hi: int, r: int, s: int, prefix: Sequence[int] = ()) -> list[int]:
    prefix = tuple(prefix)
    if len(prefix) > n or any(not lo <= c <= hi for c in prefix):
        return []
    counts: dict[int, int] = {}
    free = n - len(prefix)
    for tail in itertools.product(range(lo, hi + 1), repeat=free):
        m = rc(prefix + tail, r, s)
        counts[m] = counts.get(m, 0) + 1
    return _dense(counts)


def _catalan_words(n: int, prefix: Sequence[int]):
    if n == 0:
        if not prefix:
            yield ()
        return
    w = list(prefix) or [1]
    if w[0] != 1 or any(b > a + 1 or b < 1 for a, b in zip(w, w[1:])) or len(w) > n:
        return

    def extend():
        if len(w) == n:
            yield w
            return
        for c in range(1, w[-1] + 2):
            w.append(c)
            yield from extend()
            w.pop()

    yield from extend()


def hist_catalan(n: int, r: int, s: int, prefix: Sequence[int] = ()) -> list[list[int]]:
    """``out[i][m]``: Catalan words of length ``n`` ending in ``i`` with capacity ``m``.

    Index 0 holds the empty word when ``n == 0``.
    """
    by_last: list[dict[int, int]] = [dict() for _ in range(n + 1)]
    for w in _catalan_words(n, prefix):
        last = w[-1] if w else 0
        m = rc(w, r, s)
        d = by_last[last]
        d[m] = d.get(m, 0) + 1
    return [_dense(d) for d in by_last]


def hist_perms(n: int, r: int, s: int) -> list[int]:
    counts: dict[int, int] = {}
    for p in itertools.permutations(range(1, n + 1)):
        m = rc(p, r, s)
        counts[m] = counts.get(m, 0) + 1
    return _dense(counts)
