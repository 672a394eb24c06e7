"""Generating functions and closed-form totals."""
from ._common import NotADistributionError, check_distribution
from .catalan import (
    ending_mass,
    gf_catalan,
    gf_catalan_1xs,
    gf_catalan_ending,
    functional_equation_residual,
    functional_equation_sides,
    catalan_derivative_series,
    p_coefficients,
)
from .totals import (
    NonIntegralResult,
    c_minus_one_power_stated,
    eval_r22,
    example_r2s1,
    gf_total_catalan,
    gf_total_catalan_1xs,
    total_catalan,
    total_catalan_1xs,
    total_perms,
)
from .words import gf_total_words, gf_words, gf_words_1xs, gf_words_min, power_sum, total_words

__all__ = [
    "NotADistributionError", "NonIntegralResult", "check_distribution",
    "ending_mass", "gf_catalan", "gf_catalan_1xs", "gf_catalan_ending", "functional_equation_residual",
    "functional_equation_sides", "catalan_derivative_series", "p_coefficients",
    "c_minus_one_power_stated", "eval_r22", "example_r2s1", "gf_total_catalan",
    "gf_total_catalan_1xs", "total_catalan", "total_catalan_1xs", "total_perms",
    "gf_total_words", "gf_words", "gf_words_1xs", "gf_words_min", "power_sum", "total_words",
]
