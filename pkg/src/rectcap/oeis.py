"""OEIS b-file reading and offset-tolerant sequence matching."""
from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb
from pathlib import Path
from typing import Callable

from .algebra import catalan_number

BFILE_URL = "https://oeis.org/{id}/b{num}.txt"
OFFSETS = range(-2, 3)
MIN_TERMS = 10


class BFileError(ValueError):
    pass


def normalize_id(seq_id: str) -> str:
    m = re.fullmatch(r"[Aa]?(\d{1,6})", seq_id.strip())
    if not m:
        raise BFileError(f"not an OEIS id: {seq_id!r}")
    return f"A{int(m.group(1)):06d}"


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse ``index value`` lines; blank lines and ``#`` comments are skipped."""
    terms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            terms.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
    if not terms:
        raise BFileError("b-file holds no terms")
    terms.sort()
    return terms


def read_bfile(path: str | Path) -> list[tuple[int, int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BFileError(f"cannot read {path}: {exc}") from exc
    return parse_bfile(text)


def bundled_bfile(seq_id: str) -> list[tuple[int, int]] | None:
    sid = normalize_id(seq_id)
    res = resources.files("rectcap") / "data" / f"b{sid[1:]}.txt"
    if not res.is_file():
        return None
    return parse_bfile(res.read_text())


def fetch_bfile(seq_id: str, timeout: float = 20.0) -> list[tuple[int, int]]:
    sid = normalize_id(seq_id)
    url = BFILE_URL.format(id=sid, num=sid[1:])
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            text = resp.read().decode("ascii", errors="replace")
    except OSError as exc:
        raise BFileError(f"could not fetch {url}: {exc}") from exc
    return parse_bfile(text)


# --- generators -------------------------------------------------------------

def _squared_ballot_sum(n: int) -> int:
    v = sum((Fraction(k * k, 2 * n - k) * comb(2 * n - k, n) for k in range(1, n + 1)), Fraction(0))
    return int(v)


def _params(spec: str) -> dict[str, int]:
    out = {}
    for part in filter(None, spec.split(",")):
        key, _, val = part.partition("=")
        if not val.strip().lstrip("-").isdigit():
            raise ValueError(f"bad generator parameter {part!r}")
        out[key.strip()] = int(val)
    return out


def make_generator(spec: str) -> Callable[[int], int]:
    """Build ``n -> value`` from ``name[:key=val,...]``.

    Names: ``words-total`` (k, r, s), ``catalan-total`` (r, s),
    ``catalan-total-1xs`` (s), ``perms-total`` (r, s), ``catalan-diff``,
    ``squared-ballot-sum``, ``catalan``.
    """
    from .genfunc import total_catalan, total_catalan_1xs, total_perms, total_words

    name, _, rest = spec.partition(":")
    p = _params(rest)
    try:
        if name == "words-total":
            k, r, s = p["k"], p["r"], p["s"]
            return lambda n: total_words(n, k, r, s)
        if name == "catalan-total":
            r, s = p["r"], p["s"]
            return lambda n: total_catalan(n, r, s)
        if name == "catalan-total-1xs":
            s = p["s"]
            return lambda n: total_catalan_1xs(n, s)
        if name == "perms-total":
            r, s = p["r"], p["s"]
            return lambda n: total_perms(n, r, s)
    except KeyError as exc:
        raise ValueError(f"generator {name!r} is missing parameter {exc}") from None
    if name == "catalan-diff":
        return lambda n: catalan_number(n + 1) - catalan_number(n)
    if name == "squared-ballot-sum":
        return _squared_ballot_sum
    if name == "catalan":
        return catalan_number
    raise ValueError(f"unknown generator {name!r}")


@dataclass
class Match:
    offset: int
    prefix: int
    compared: int

    @property
    def full(self) -> bool:
        return self.compared > 0 and self.prefix == self.compared


def match_offset(terms: list[tuple[int, int]], gen: Callable[[int], int], offset: int) -> Match:
    """Compare b-file term ``a(i)`` with ``gen(i - offset)``."""
    prefix = compared = 0
    broken = False
    for i, value in terms:
        n = i - offset
        if n < 0:
            continue
        try:
            mine = gen(n)
        except (ValueError, ArithmeticError):
            break
        compared += 1
        if not broken and mine == value:
            prefix += 1
        else:
            broken = True
    return Match(offset, prefix, compared)


def best_match(terms, gen, offsets=OFFSETS) -> tuple[Match, list[Match]]:
    """Longest matching prefix over the tried offsets (ties go to the smallest |offset|)."""
    results = [match_offset(terms, gen, d) for d in offsets]
    best = max(results, key=lambda m: (m.prefix, m.full, -abs(m.offset)))
    return best, results


# Known sequence identities: OEIS id and the generator that should reproduce it.
KNOWN_PAIRINGS = [
    ("A167667", "words-total:k=2,r=1,s=1"),
    ("A001787", "words-total:k=2,r=2,s=1"),
    ("A001787", "words-total:k=2,r=2,s=2"),
    ("A001787", "words-total:k=2,r=2,s=3"),
    ("A036290", "words-total:k=3,r=2,s=1"),
    ("A027471", "words-total:k=3,r=3,s=1"),
    ("A027471", "words-total:k=3,r=3,s=2"),
    ("A027471", "words-total:k=3,r=3,s=3"),
    ("A000245", "squared-ballot-sum"),
    ("A000245", "catalan-diff"),
    ("A000346", "catalan-total-1xs:s=1"),
    ("A006419", "catalan-total:r=2,s=1"),
]
