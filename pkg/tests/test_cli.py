import csv
import io
import json

import pytest
from click.testing import CliRunner

from rectcap.cli import main, render_text


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args))

    return invoke


def test_rc(run):
    res = run("rc", "345134", "--rect", "3x2")
    assert res.exit_code == 0 and res.output.strip() == "4"
    assert run("rc", "12,11,3", "--rect", "2x2").output.strip() == "12"


@pytest.mark.parametrize("word", ["1a2", "1,,2", "0"])
def test_rc_malformed_word_is_usage_error(run, word):
    assert run("rc", word, "--rect", "1x1").exit_code == 2


def test_bad_rect_is_usage_error(run):
    assert run("rc", "12", "--rect", "3").exit_code == 2


@pytest.mark.parametrize("method", ["brute", "gf"])
def test_dist_words(run, method):
    res = run("dist", "words", "-n", "3", "-k", "2", "--rect", "2x2", "--method", method)
    assert res.exit_code == 0
    assert res.output.strip() == "0:5 1:2 2:1"


def test_dist_catalan_methods_agree(run):
    a = run("dist", "catalan", "-n", "7", "--rect", "2x1", "--method", "gf").output
    b = run("dist", "catalan", "-n", "7", "--rect", "2x1", "--method", "brute").output
    assert a == b


def test_dist_perms_gf_refused(run):
    res = run("dist", "perms", "-n", "3", "--rect", "1x1", "--method", "gf")
    assert res.exit_code != 0
    assert "permutations" in res.output
    assert run("dist", "perms", "-n", "3", "--rect", "1x1", "--method", "brute").output.strip() == "6:6"


def test_dist_words_needs_k(run):
    assert run("dist", "words", "-n", "3", "--rect", "1x1").exit_code == 2


def test_dist_large_r_falls_back(run):
    res = run("dist", "words", "-n", "3", "-k", "2", "--rect", "3x1", "--format", "json")
    data = json.loads(res.output)
    assert data["rows"] == [{"exponent": 0, "coefficient": 8}]
    assert data["parameters"]["notes"]


@pytest.mark.parametrize("method", ["brute", "gf", "formula"])
def test_total_methods_agree(run, method):
    assert run("total", "words", "-n", "5", "-k", "3", "--rect", "2x2", "--method", method).output.strip() == "540"
    assert run("total", "catalan", "-n", "5", "--rect", "2x1", "--method", method).output.strip() == "176"


def test_total_perms(run):
    assert run("total", "perms", "-n", "5", "--rect", "2x2").output.strip() == \
        run("total", "perms", "-n", "5", "--rect", "2x2", "--method", "brute").output.strip()


def test_json_schema(run):
    data = json.loads(run("rc", "345134", "--rect", "3x2", "--format", "json").output)
    assert set(data) == {"command", "parameters", "rows", "checks"}
    assert data["command"] == "rc" and data["rows"] == [{"value": 4}]


def test_csv_has_header(run):
    out = run("dist", "words", "-n", "3", "-k", "2", "--rect", "2x2", "--format", "csv").output
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0] == {"exponent": "0", "coefficient": "5"}
    assert len(rows) == 3


ROUND_TRIP = [
    ("rc", "345134", "--rect", "3x2"),
    ("dist", "catalan", "-n", "5", "--rect", "1x2"),
    ("total", "words", "-n", "4", "-k", "2", "--rect", "1x1"),
    ("table", "table1", "--n-max", "5", "--row", "3,2,2"),
    ("table", "table2", "--n-max", "6"),
    ("oeis", "A001787", "words-total:k=2,r=2,s=1"),
]


@pytest.mark.parametrize("args", ROUND_TRIP, ids=lambda a: a[0])
def test_text_rederived_from_json(run, args):
    text = run(*args).output
    data = json.loads(run(*args, "--format", "json").output)
    assert render_text(data) + "\n" == text


def test_table_output(run):
    res = run("table", "table1", "--n-max", "6", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert len(data["rows"]) == 15
    assert all(c["ok"] for c in data["checks"])
    row = next(r for r in data["rows"] if (r["k"], r["r"], r["s"]) == (3, 2, 2))
    assert row["n=4"] == 5 * 3 * 9
    assert row["oeis"] == "-"


def test_table2_output(run):
    data = json.loads(run("table", "table2", "--n-max", "5", "--format", "json").output)
    assert data["rows"][0]["oeis"] == "A000346"
    assert data["rows"][0]["n=5"] == (4 ** 5 - 252) // 2


def test_verify_exit_status(run):
    res = run("verify", "--suite", "identities", "--bounds", "k=3,s=2,r=3,n=6,zr=5")
    assert res.exit_code == 0
    assert "0 failed" in res.output


def test_verify_catalan_reports_findings(run):
    res = run("verify", "--suite", "catalan", "--bounds", "n=8,r=3,s=2,order=10,shift_n=8", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    stated = [r for r in data["rows"] if r["formula"].startswith("r22 stated")]
    assert stated and stated[0]["stated"] == "31"
    names = {c["name"] for c in data["checks"]}
    assert {"r22-stated-differs", "r22-repaired-offset", "example-formula-offset"} <= names


def test_verify_bad_bounds(run):
    assert run("verify", "--bounds", "k").exit_code == 2


def test_oeis_bundled(run):
    res = run("oeis", "A006419", "catalan-total:r=2,s=1", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["parameters"]["adopted_offset"] == -1
    assert data["checks"][0]["ok"]


def test_oeis_local_file(run, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("\n".join(f"{i} {i * 2 ** (i - 1) if i else 0}" for i in range(15)))
    res = run("oeis", "A001787", "words-total:k=2,r=2,s=1", "--bfile", str(p))
    assert res.exit_code == 0


def test_oeis_mismatch_fails(run, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("\n".join(f"{i} {7 * i + 3}" for i in range(15)))
    assert run("oeis", "A001787", "catalan", "--bfile", str(p)).exit_code == 1


def test_oeis_missing_bundled(run):
    assert run("oeis", "A000001", "catalan").exit_code == 2


def test_oeis_bfile_and_fetch_conflict(run, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n")
    assert run("oeis", "A000108", "catalan", "--bfile", str(p), "--fetch").exit_code != 0
