import pytest

from rectcap import oracle
from rectcap.algebra import TPoly, catalan_number
from rectcap.oracle import EnumerationCapError


def test_small_word_distribution():
    # over {1,2}^3 with a 2x2 rectangle only 122, 221 (one each) and 222 (two) contribute
    assert oracle.dist_words_brute(3, 2, 2, 2) == TPoly({0: 5, 1: 2, 2: 1})


def test_total_of_distribution():
    assert oracle.total_brute(TPoly({0: 6, 1: 2})) == 2
    assert oracle.total_brute(oracle.dist_words_brute(3, 2, 2, 2)) == 4


@pytest.mark.parametrize("workers", [2, 3])
def test_workers_give_same_answer(workers):
    assert oracle.dist_words_brute(7, 3, 2, 2, workers=workers) == oracle.dist_words_brute(7, 3, 2, 2)
    assert (oracle.dist_words_min_brute(6, 4, 2, 2, 1, workers=workers)
            == oracle.dist_words_min_brute(6, 4, 2, 2, 1))


def test_min_restriction():
    d = oracle.dist_words_min_brute(4, 3, 2, 1, 1)
    assert d.eval_t1() == 2 ** 4
    assert d.min_exp == 8
    with pytest.raises(ValueError):
        oracle.dist_words_min_brute(4, 3, 4, 1, 1)


@pytest.mark.parametrize("n", range(0, 10))
def test_catalan_masses(n):
    assert oracle.dist_catalan_brute(n, 1, 1).eval_t1() == catalan_number(n)
    by_last = oracle.dist_catalan_by_last(n, 2, 1)
    assert sum(p.eval_t1() for p in by_last.values()) == catalan_number(n)


def test_catalan_ending():
    assert oracle.dist_catalan_ending_brute(2, 1, 2, 1) == TPoly({0: 1})
    with pytest.raises(ValueError):
        oracle.dist_catalan_ending_brute(3, 0, 1, 1)


def test_permutations():
    d = oracle.dist_perms_brute(3, 1, 1)
    assert d == TPoly({6: 6})
    assert oracle.total_perms_brute(3, 2, 2) == 4


def test_caps():
    with pytest.raises(EnumerationCapError):
        oracle.dist_catalan_brute(oracle.CATALAN_CAP + 1, 1, 1)
    with pytest.raises(EnumerationCapError):
        oracle.dist_perms_brute(oracle.PERM_CAP + 1, 1, 1)
    with pytest.raises(EnumerationCapError):
        oracle.dist_words_brute(30, 9, 1, 1)


def test_rejects_bad_rectangles():
    with pytest.raises(ValueError):
        oracle.dist_words_brute(2, 2, 0, 1)
