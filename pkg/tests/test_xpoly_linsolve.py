import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rectcap.algebra import XPoly, chebyshev_u, z_poly
from rectcap.algebra.linsolve import SingularSystemError, gauss_solve, m_matrix, mat_vec, solve_m_system
from rectcap.algebra.xpoly import z_values

X = XPoly.x()


def test_z_initial_values():
    assert z_poly(0) == XPoly()
    assert z_poly(1) == XPoly([1]) == z_poly(2)
    assert z_poly(3) == XPoly([1, -1])
    assert z_poly(4) == XPoly([1, -2])
    assert z_poly(5) == XPoly([1, -3, 1])


@pytest.mark.parametrize("n", range(3, 14))
def test_z_recurrence(n):
    assert z_poly(n) == z_poly(n - 1) - X * z_poly(n - 2)


@pytest.mark.parametrize("n", range(-1, 12))
def test_chebyshev_recurrence_and_values(n):
    u = chebyshev_u(n)
    # U_n(1) = n + 1
    assert u(1) == n + 1
    if n >= 1:
        assert u == XPoly([0, 2]) * chebyshev_u(n - 1) - chebyshev_u(n - 2)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_z_values_match_polynomials(x):
    vals = z_values(9, x)
    assert [z_poly(n)(x) for n in range(len(vals))] == list(vals)


def test_horner_with_fractions():
    p = XPoly([1, 2, 3])
    assert p(Fraction(1, 2)) == Fraction(11, 4)


def _instance(rng):
    """Random exact system, resampled until the closed form's denominators are nonzero."""
    frac = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    while True:
        r = rng.randint(2, 8)
        x, y = frac(), frac()
        z = z_values(r, x)
        if all(z[i] for i in range(2, r + 1)) and z[r] - x * y * z[r - 1]:
            return r, x, y, [frac() for _ in range(r - 1)]


@pytest.mark.parametrize("seed", range(200))
def test_closed_form_matches_gauss(seed):
    r, x, y, beta = _instance(random.Random(seed))
    m = m_matrix(r, x, y)
    got = solve_m_system(r, x, y, beta)
    assert got == gauss_solve(m, beta)
    assert mat_vec(m, got) == beta


def test_closed_form_reports_vanishing_denominator():
    # Z_3(1) = 0
    with pytest.raises(SingularSystemError):
        solve_m_system(3, 1, Fraction(1, 2), [1, 1])


def test_singular_matrix_detected():
    with pytest.raises(SingularSystemError):
        gauss_solve([[1, 2], [2, 4]], [1, 1])
