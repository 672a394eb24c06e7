"""Exact algebra: Laurent polynomials in t, truncated series in x, Z polynomials."""
from .catalan import catalan_number, catalan_series, ending_count
from .linsolve import SingularSystemError, gauss_solve, m_matrix, mat_vec, solve_m_system
from .tpoly import ONE, T, ZERO, TPoly
from .xpoly import XPoly, chebyshev_u, z_poly, z_values
from .xseries import SeriesError, XSeries

__all__ = [
    "ONE", "T", "ZERO", "TPoly", "XSeries", "XPoly", "SeriesError", "SingularSystemError",
    "catalan_number", "catalan_series", "ending_count", "chebyshev_u", "z_poly", "z_values",
    "gauss_solve", "m_matrix", "mat_vec", "solve_m_system",
]
