import pytest
from hypothesis import given, strategies as st

from rectcap.algebra import TPoly
from rectcap.algebra.tpoly import ONE, T, ZERO

polys = st.dictionaries(st.integers(-4, 6), st.integers(-20, 20), max_size=5).map(TPoly)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_eval_and_derivative_are_homomorphic(a, b):
    assert (a * b).eval_t1() == a.eval_t1() * b.eval_t1()
    # product rule at t = 1
    assert (a * b).ddt_eval_t1() == a.ddt_eval_t1() * b.eval_t1() + a.eval_t1() * b.ddt_eval_t1()


def test_zero_coefficients_are_dropped():
    p = TPoly({0: 1, 3: 0, 2: 5})
    assert dict(p.items()) == {0: 1, 2: 5}
    assert (T - T).is_zero()
    assert not ZERO


def test_basic_accessors():
    p = TPoly.from_list([6, 2], low=0)
    assert p[0] == 6 and p[1] == 2 and p[7] == 0
    assert p.min_exp == 0 and p.max_exp == 1
    assert p.dense() == [6, 2]
    assert p.ddt_eval_t1() == 2
    assert p.shift_t(3) == TPoly({3: 6, 4: 2})
    assert TPoly.monomial(1, -2).is_unit_monomial()
    assert TPoly.monomial(-1, 4).is_unit_monomial()
    assert not TPoly.monomial(2, 0).is_unit_monomial()


def test_distribution_flag():
    assert TPoly({0: 5, 1: 2, 2: 1}).is_distribution()
    assert not TPoly({0: -1}).is_distribution()
    assert not TPoly({-1: 1}).is_distribution()


def test_integer_interop_and_powers():
    assert 3 + T == TPoly({0: 3, 1: 1})
    assert 1 - T == TPoly({0: 1, 1: -1})
    assert (1 + T) ** 3 == TPoly({0: 1, 1: 3, 2: 3, 3: 1})
    assert T ** 0 == ONE


def test_rejects_foreign_types():
    with pytest.raises(TypeError):
        TPoly({0: 1}) + "x"
