"""Command-line interface: ``rectcap rc|dist|total|table|verify|oeis``.

Every command builds a payload ``{command, parameters, rows, checks}``; the
text, CSV and JSON outputs are all rendered from that payload, so the text
form can be re-derived from the JSON form.
"""
from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import oracle
from .bargraph import RectSize, parse_word, rectangle_capacity
from .genfunc import (
    gf_catalan,
    gf_words,
    total_catalan,
    total_catalan_1xs,
    total_perms,
    total_words,
)
from .report import failures

DEFAULT_ORDER = 16


def payload(command: str, parameters: dict, rows: list[dict], checks: list[dict] | None = None) -> dict:
    return {"command": command, "parameters": parameters, "rows": rows, "checks": checks or []}


def _table(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _check_lines(checks: list[dict]) -> list[str]:
    out = []
    for c in checks:
        status = "INFO" if c.get("informational") else ("PASS" if c["ok"] else "FAIL")
        params = ",".join(f"{k}={v}" for k, v in c.get("params", {}).items())
        line = f"[{status}] {c['suite']}/{c['name']}"
        if params:
            line += f" ({params})"
        if c.get("note"):
            line += f": {c['note']}"
        out.append(line)
    return out


def render_text(p: dict) -> str:
    """Plain-text rendering; depends only on the payload."""
    cmd, rows = p["command"], p["rows"]
    if cmd == "rc" or cmd == "total":
        body = str(rows[0]["value"])
    elif cmd == "dist":
        body = " ".join(f"{r['exponent']}:{r['coefficient']}" for r in rows)
    else:
        body = _table(rows)
    extra = _check_lines(p["checks"])
    return "\n".join([body] + extra) if extra else body


def render_csv(p: dict) -> str:
    buf = io.StringIO()
    rows = p["rows"]
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def emit(p: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(p, indent=2))
    elif fmt == "csv":
        click.echo(render_csv(p))
    else:
        click.echo(render_text(p))


class RectParam(click.ParamType):
    name = "RxS"

    def convert(self, value, param, ctx):
        if isinstance(value, RectSize):
            return value
        try:
            return RectSize.parse(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


RECT = RectParam()
fmt_option = click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text",
                          show_default=True)
rect_option = click.option("--rect", type=RECT, required=True, help="rectangle size, e.g. 3x2")
CLASSES = click.Choice(["words", "catalan", "perms"])


def _need_k(cls: str, k: int | None) -> None:
    if cls == "words" and k is None:
        raise click.UsageError("class 'words' needs -k")


@click.group()
@click.version_option(package_name="rectcap")
def main():
    """Rectangle capacity of bargraphs: exact distributions, totals and checks."""


@main.command()
@click.argument("word")
@rect_option
@fmt_option
def rc(word, rect, fmt):
    """Rectangle capacity of WORD (digits like 345134, or comma separated)."""
    try:
        w = parse_word(word)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    value = rectangle_capacity(w, rect)
    emit(payload("rc", {"word": word, "rect": str(rect)}, [{"value": value}]), fmt)


def _dist_poly(cls, n, k, rect, method):
    r, s = rect
    notes = []
    if method == "brute":
        if cls == "words":
            return oracle.dist_words_brute(n, k, r, s), notes
        if cls == "catalan":
            return oracle.dist_catalan_brute(n, r, s), notes
        return oracle.dist_perms_brute(n, r, s), notes
    if cls == "perms":
        raise click.ClickException(
            "no generating function is known for the distribution over permutations "
            "(only the total has a closed form); use --method brute")
    if cls == "words":
        if r > k:
            notes.append("r > k lies outside the generating function's range; answered by enumeration")
            return oracle.dist_words_brute(n, k, r, s), notes
        return gf_words(k, r, s, max(n, 0)).coeff(n), notes
    return gf_catalan(r, s, n).coeff(n), notes


@main.command()
@click.argument("cls", metavar="CLASS", type=CLASSES)
@click.option("-n", "n", type=click.IntRange(min=0), required=True)
@click.option("-k", "k", type=click.IntRange(min=1))
@rect_option
@click.option("--method", type=click.Choice(["brute", "gf"]), default="gf", show_default=True)
@fmt_option
def dist(cls, n, k, rect, method, fmt):
    """Distribution polynomial of the statistic over CLASS (words, catalan, perms)."""
    _need_k(cls, k)
    try:
        poly, notes = _dist_poly(cls, n, k, rect, method)
    except (ValueError, ArithmeticError) as exc:
        raise click.ClickException(str(exc))
    rows = [{"exponent": e, "coefficient": c} for e, c in poly.items()]
    params = {"class": cls, "n": n, "k": k, "rect": str(rect), "method": method}
    if notes:
        params["notes"] = notes
    emit(payload("dist", params, rows), fmt)


def _total(cls, n, k, rect, method):
    r, s = rect
    if method in ("brute", "gf"):
        if method == "gf" and cls == "perms":
            raise click.ClickException("no distribution generating function for permutations; "
                                       "use --method formula or brute")
        poly, _ = _dist_poly(cls, n, k, rect, method)
        return oracle.total_brute(poly)
    if cls == "words":
        return total_words(n, k, r, s)
    if cls == "catalan":
        return total_catalan_1xs(n, s) if r == 1 else total_catalan(n, r, s)
    return total_perms(n, r, s)


@main.command()
@click.argument("cls", metavar="CLASS", type=CLASSES)
@click.option("-n", "n", type=click.IntRange(min=0), required=True)
@click.option("-k", "k", type=click.IntRange(min=1))
@rect_option
@click.option("--method", type=click.Choice(["brute", "gf", "formula"]), default="formula", show_default=True)
@fmt_option
def total(cls, n, k, rect, method, fmt):
    """Total number of rectangles over CLASS."""
    _need_k(cls, k)
    try:
        value = _total(cls, n, k, rect, method)
    except (ValueError, ArithmeticError) as exc:
        raise click.ClickException(str(exc))
    emit(payload("total", {"class": cls, "n": n, "k": k, "rect": str(rect), "method": method},
                 [{"value": value}]), fmt)


@main.command()
@click.argument("which", type=click.Choice(["table1", "table2"]))
@click.option("--n-min", type=click.IntRange(min=0), default=None)
@click.option("--n-max", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--row", "row_filter", default=None, help="only rows with this key, e.g. 2,2,2")
@click.option("--no-brute", is_flag=True, help="skip the enumeration cross-check")
@fmt_option
def table(which, n_min, n_max, row_filter, no_brute, fmt):
    """Reproduce a table of totals, cross-checked against closed forms and enumeration."""
    from .tables import TABLE1, TABLE2
    from .verify import catalan_total_oracle

    rows, checks = [], []
    spec_rows = TABLE1 if which == "table1" else TABLE2
    wanted = tuple(int(v) for v in row_filter.split(",")) if row_filter else None
    for row in spec_rows:
        if wanted and row.key != wanted:
            continue
        lo = row.n_min if n_min is None else max(n_min, row.n_min)
        out = dict(zip(("k", "r", "s") if which == "table1" else ("s",), row.key))
        out["formula"] = row.expression
        out["oeis"] = row.oeis or "-"
        ok = True
        for n in range(lo, n_max + 1):
            stated = row.formula(n)
            if which == "table1":
                k, r, s = row.key
                ref = total_words(n, k, r, s)
                if not no_brute and k ** n <= 300_000:
                    ok &= oracle.total_brute(oracle.dist_words_brute(n, k, r, s)) == ref
            else:
                (s,) = row.key
                ref = total_catalan_1xs(n, s)
                if not no_brute and n <= 12:
                    ok &= catalan_total_oracle(n, 1, s) == ref
            ok &= stated == ref
            out[f"n={n}"] = stated
        rows.append(out)
        checks.append({"suite": which, "name": "row", "ok": ok, "params": {"key": ",".join(map(str, row.key))},
                       "note": "", "informational": False})
    emit(payload("table", {"which": which, "n_min": n_min, "n_max": n_max}, rows, checks), fmt)
    if not all(c["ok"] for c in checks):
        sys.exit(1)


@main.command()
@click.option("--suite", type=click.Choice(["identities", "words", "catalan", "perms", "all"]), default="all",
              show_default=True)
@click.option("--bounds", default=None, help="override grid limits, e.g. k=4,n=10")
@click.option("--quiet", is_flag=True, help="print only failing and informational checks")
@fmt_option
def verify(suite, bounds, quiet, fmt):
    """Run verification suites; exit status is nonzero iff a check fails."""
    from .verify import parse_bounds, run_suite

    try:
        checks, findings = run_suite(suite, parse_bounds(bounds))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    shown = [c for c in checks if not quiet or c.informational or not c.ok]
    rows = [{"formula": f.formula, "params": ",".join(f"{k}={v}" for k, v in f.params.items()),
             "stated": str(f.stated), "oracle": str(f.oracle)} for f in findings]
    p = payload("verify", {"suite": suite, "bounds": bounds or "default"}, rows, [c.as_dict() for c in shown])
    emit(p, fmt)
    bad = failures(checks)
    if fmt == "text":
        click.echo(f"{len(checks)} checks, {len(bad)} failed")
    sys.exit(1 if bad else 0)


@main.command()
@click.argument("seq_id")
@click.argument("generator")
@click.option("--bfile", type=click.Path(dir_okay=False), default=None, help="local b-file")
@click.option("--fetch", is_flag=True, help="download the b-file from oeis.org")
@click.option("--min-terms", type=click.IntRange(min=1), default=10, show_default=True)
@fmt_option
def oeis(seq_id, generator, bfile, fetch, min_terms, fmt):
    """Match GENERATOR (e.g. words-total:k=2,r=2,s=1) against OEIS sequence SEQ_ID."""
    from .oeis import BFileError, best_match, bundled_bfile, fetch_bfile, make_generator, normalize_id, read_bfile

    try:
        sid = normalize_id(seq_id)
        gen = make_generator(generator)
        if bfile and fetch:
            raise click.UsageError("use either --bfile or --fetch")
        if bfile:
            terms, source = read_bfile(bfile), bfile
        elif fetch:
            terms, source = fetch_bfile(sid), "oeis.org"
        else:
            terms, source = bundled_bfile(sid), "bundled"
            if terms is None:
                raise click.UsageError(f"no bundled b-file for {sid}; pass --bfile or --fetch")
    except (BFileError, ValueError) as exc:
        raise click.ClickException(str(exc))
    best, results = best_match(terms, gen)
    rows = [{"offset": m.offset, "prefix": m.prefix, "compared": m.compared, "full": m.full} for m in results]
    ok = best.full and best.prefix >= min_terms
    checks = [{"suite": "oeis", "name": "match", "ok": ok,
               "params": {"id": sid, "offset": best.offset},
               "note": f"{best.prefix} of {best.compared} terms match (source: {source})", "informational": False}]
    emit(payload("oeis", {"id": sid, "generator": generator, "source": source, "adopted_offset": best.offset},
                 rows, checks), fmt)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
