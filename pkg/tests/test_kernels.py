import pytest
from hypothesis import given, strategies as st

from rectcap import _pykernels, kernels
from rectcap.bargraph import enumerate_catalan, rectangle_capacity, RectSize
from rectcap.oracle import _add_hists

try:
    from rectcap import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@given(st.lists(st.integers(1, 9), max_size=10).map(tuple), st.integers(1, 4), st.integers(1, 4))
def test_rc_backends_agree(w, r, s):
    assert _ckernels.rc(w, r, s) == _pykernels.rc(w, r, s)


@needs_ext
@pytest.mark.parametrize("n,lo,hi,r,s", [(0, 1, 3, 1, 1), (4, 1, 3, 2, 2), (5, 2, 4, 1, 3), (3, 1, 1, 1, 1), (6, 1, 2, 1, 1)])
def test_word_histograms_agree(n, lo, hi, r, s):
    assert list(_ckernels.hist_words(n, lo, hi, r, s)) == list(_pykernels.hist_words(n, lo, hi, r, s))


@needs_ext
@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("r,s", [(1, 1), (2, 1), (2, 2), (3, 3)])
def test_catalan_histograms_agree(n, r, s):
    c = [list(h) for h in _ckernels.hist_catalan(n, r, s)]
    p = [list(h) for h in _pykernels.hist_catalan(n, r, s)]
    assert c == p


@needs_ext
@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("r,s", [(1, 1), (2, 2), (1, 3)])
def test_perm_histograms_agree(n, r, s):
    assert list(_ckernels.hist_perms(n, r, s)) == list(_pykernels.hist_perms(n, r, s))


@pytest.mark.parametrize("impl", [_pykernels] + ([_ckernels] if _ckernels else []))
def test_prefix_partition_is_independent(impl):
    n, lo, hi, r, s = 5, 1, 3, 2, 2
    whole = list(impl.hist_words(n, lo, hi, r, s))
    parts = [list(impl.hist_words(n, lo, hi, r, s, (a, b))) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]
    assert _add_hists(parts) == whole


@pytest.mark.parametrize("impl", [_pykernels] + ([_ckernels] if _ckernels else []))
def test_catalan_histogram_against_direct_enumeration(impl):
    n, r, s = 6, 2, 2
    hist = impl.hist_catalan(n, r, s)
    direct = {}
    for w in enumerate_catalan(n):
        key = (w[-1], rectangle_capacity(w, RectSize(r, s)))
        direct[key] = direct.get(key, 0) + 1
    got = {(i, e): c for i, h in enumerate(hist) for e, c in enumerate(h) if c}
    assert got == direct


def test_word_histogram_total_mass():
    h = kernels.hist_words(6, 1, 3, 1, 1)
    assert sum(h) == 3 ** 6
    assert sum(e * c for e, c in enumerate(h)) == 6 * 2 * 3 ** 6


def test_pure_python_override():
    import os
    import subprocess
    import sys

    env = dict(os.environ, RECTCAP_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import rectcap; print(rectcap.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
