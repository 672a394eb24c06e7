"""Regenerate the bundled b-files in src/rectcap/data/.

The sandbox this package was built in had no route to oeis.org, so the
files are produced from each sequence's defining formula and OEIS offset.
Replace them with downloaded copies (``rectcap oeis ... --fetch``) when online.
"""
from math import comb
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "rectcap" / "data"
TERMS = 25

SEQUENCES = {
    # id: (offset, formula, description)
    "A001787": (0, lambda n: n * 2 ** (n - 1) if n else 0, "n*2^(n-1)"),
    "A027471": (1, lambda n: (n - 1) * 3 ** (n - 2) if n >= 2 else 0, "(n-1)*3^(n-2)"),
    "A036290": (0, lambda n: n * 3 ** n, "n*3^n"),
    "A167667": (0, lambda n: 3 * n * 2 ** (n - 1) if n else 0, "3*n*2^(n-1)"),
    "A000245": (0, lambda n: 3 * comb(2 * n, n - 1) // (n + 2) if n else 0,
                "3*(2n)!/((n+2)!*(n-1)!)"),
    "A000346": (0, lambda n: 2 ** (2 * n + 1) - comb(2 * n + 1, n + 1), "2^(2n+1)-binomial(2n+1,n+1)"),
    "A006419": (1, lambda n: comb(2 * n + 1, n) - comb(2 * n + 3, n + 1) + 2 * 4 ** n,
                "binomial(2n+1,n)-binomial(2n+3,n+1)+2*4^n"),
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for sid, (offset, f, desc) in SEQUENCES.items():
        lines = [f"# {sid}: a(n) = {desc}, offset {offset}",
                 "# regenerated offline from the defining formula (no network access)"]
        lines += [f"{n} {f(n)}" for n in range(offset, offset + TERMS)]
        (OUT / f"b{sid[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
