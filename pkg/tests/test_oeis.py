import io
import urllib.request

import pytest

from rectcap import oeis
from rectcap.oeis import BFileError, Match, best_match, make_generator, match_offset, normalize_id, parse_bfile

BUNDLED = ["A001787", "A027471", "A036290", "A167667", "A000245", "A000346", "A006419"]


def test_normalize():
    assert normalize_id("A1787") == "A001787"
    assert normalize_id("1787") == "A001787"
    with pytest.raises(BFileError):
        normalize_id("B12")


def test_parse_bfile():
    terms = parse_bfile("# comment\n\n1 5\n0 3\n2 -7\n")
    assert terms == [(0, 3), (1, 5), (2, -7)]
    for bad in ("", "# only\n", "1\n", "1 x\n"):
        with pytest.raises(BFileError):
            parse_bfile(bad)


@pytest.mark.parametrize("sid", BUNDLED)
def test_bundled_files_present(sid):
    terms = oeis.bundled_bfile(sid)
    assert terms is not None and len(terms) >= oeis.MIN_TERMS


def test_missing_bundled_file():
    assert oeis.bundled_bfile("A000001") is None


def test_read_bfile(tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n1 1\n2 2\n")
    assert oeis.read_bfile(p) == [(0, 1), (1, 1), (2, 2)]
    with pytest.raises(BFileError):
        oeis.read_bfile(tmp_path / "missing.txt")


def test_offsets():
    terms = [(i, 2 * i) for i in range(10)]
    gen = lambda n: 2 * (n + 1)
    # a(i) = gen(i - 1)
    assert match_offset(terms, gen, 1) == Match(1, 9, 9)
    assert match_offset(terms, gen, 0).prefix == 0
    best, results = best_match(terms, gen)
    assert best.offset == 1 and best.full
    assert len(results) == 5


def test_generators():
    assert [make_generator("catalan")(n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert [make_generator("catalan-diff")(n) for n in range(4)] == [0, 1, 3, 9]
    assert [make_generator("squared-ballot-sum")(n) for n in range(1, 5)] == [1, 3, 9, 28]
    assert make_generator("words-total:k=2,r=2,s=1")(3) == 12
    for bad in ("nope", "words-total:k=2", "catalan-total:r=x,s=1"):
        with pytest.raises(ValueError):
            make_generator(bad)


def test_fetch_uses_url(monkeypatch):
    seen = {}

    def fake(url, timeout):
        seen["url"] = url
        return io.BytesIO(b"0 0\n1 1\n")

    monkeypatch.setattr(urllib.request, "urlopen", fake)
    assert oeis.fetch_bfile("A1787") == [(0, 0), (1, 1)]
    assert seen["url"] == "https://oeis.org/A001787/b001787.txt"


def test_fetch_failure(monkeypatch):
    def boom(url, timeout):
        raise OSError("offline")

    monkeypatch.setattr(urllib.request, "urlopen", boom)
    with pytest.raises(BFileError):
        oeis.fetch_bfile("A000045")
