"""Words as bargraphs and the rectangle-capacity statistic.

A word is a tuple of positive integers, read as the column heights of a
bargraph.  ``rectangle_capacity(w, RectSize(r, s))`` counts the placements of
an ``r`` tall, ``s`` wide rectangle inside the bargraph.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterator, NamedTuple, Sequence

Word = tuple[int, ...]


class RectSize(NamedTuple):
    r: int
    s: int

    @classmethod
    def of(cls, r: int, s: int) -> RectSize:
        if r < 1 or s < 1:
            raise ValueError(f"rectangle sides must be >= 1, got {r}x{s}")
        return cls(r, s)

    @classmethod
    def parse(cls, text: str) -> RectSize:
        """Parse ``"RxS"`` (``x`` or ``X`` or ``*`` as separator)."""
        m = re.fullmatch(r"\s*(\d+)\s*[xX*]\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"rectangle must look like RxS, got {text!r}")
        return cls.of(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.r}x{self.s}"


def _rect(rect) -> RectSize:
    if isinstance(rect, RectSize):
        return rect
    return RectSize.of(*rect)


def parse_word(text: str) -> Word:
    """Digit string (``"345134"``) or comma-separated letters (``"12,11,3"``)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed word {text!r}")
        w = tuple(int(p) for p in parts)
    elif text.isdigit():
        w = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"malformed word {text!r}")
    return check_word(w)


def format_word(w: Sequence[int]) -> str:
    if all(c < 10 for c in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def check_word(w: Sequence[int], k: int | None = None) -> Word:
    w = tuple(w)
    for c in w:
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"letters must be positive integers, got {c!r}")
        if k is not None and c > k:
            raise ValueError(f"letter {c} exceeds alphabet bound {k}")
    return w


def is_catalan(w: Sequence[int]) -> bool:
    if not w:
        return True
    if w[0] != 1:
        return False
    return all(b <= a + 1 and b >= 1 for a, b in zip(w, w[1:]))


def rectangle_capacity(w: Sequence[int], rect) -> int:
    """Sum over width-``s`` windows of ``max(min(window) - r + 1, 0)``."""
    r, s = _rect(rect)
    n = len(w)
    total = 0
    for i in range(n - s + 1):
        h = min(w[i:i + s]) - r + 1
        if h > 0:
            total += h
    return total


def enumerate_words(n: int, k: int) -> Iterator[Word]:
    """All of ``[k]^n`` in lexicographic order."""
    if n < 0 or k < 1:
        raise ValueError("enumerate_words needs n >= 0 and k >= 1")
    return itertools.product(range(1, k + 1), repeat=n)


def enumerate_words_min(n: int, k: int, m: int) -> Iterator[Word]:
    """Words of ``[k]^n`` whose letters are all at least ``m``."""
    if not 1 <= m <= k:
        raise ValueError(f"enumerate_words_min needs 1 <= m <= k, got m={m}, k={k}")
    if n < 0:
        raise ValueError("n must be >= 0")
    return itertools.product(range(m, k + 1), repeat=n)


def enumerate_catalan(n: int, prefix: Sequence[int] = ()) -> Iterator[Word]:
    """Catalan words of length ``n`` (depth-first, lexicographic)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    prefix = list(prefix)
    if len(prefix) > n or not is_catalan(prefix):
        return
    if n == 0:
        yield ()
        return
    if not prefix:
        prefix = [1]
    w = prefix

    def extend() -> Iterator[Word]:
        if len(w) == n:
            yield tuple(w)
            return
        for c in range(1, w[-1] + 2):
            w.append(c)
            yield from extend()
            w.pop()

    yield from extend()


def enumerate_catalan_ending(n: int, i: int) -> Iterator[Word]:
    """Catalan words of length ``n`` whose last letter is ``i``."""
    if not 1 <= i <= n:
        raise ValueError(f"enumerate_catalan_ending needs 1 <= i <= n, got i={i}, n={n}")
    return (w for w in enumerate_catalan(n) if w[-1] == i)


def enumerate_permutations(n: int) -> Iterator[Word]:
    if n < 0:
        raise ValueError("n must be >= 0")
    return itertools.permutations(range(1, n + 1))
