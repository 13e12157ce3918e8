"""Exact smallest-parts partition statistics and their Euler-type recurrences."""

from .arith import a_coeff, b_coeff, big_C, c_coeff, delta_square, kronecker12, s_min, sigma
from .recurrences import (
    m2spt_table,
    p_table,
    spt_table,
    sptbar_table,
    verify_series_identity,
)
from .series import (
    TruncatedSeries,
    e2_series,
    euler_product_series,
    invert,
    mul,
    series_new,
    theta_series,
    triangular_series,
)

__all__ = [
    "TruncatedSeries",
    "a_coeff",
    "b_coeff",
    "big_C",
    "c_coeff",
    "delta_square",
    "e2_series",
    "euler_product_series",
    "invert",
    "kronecker12",
    "m2spt_table",
    "mul",
    "p_table",
    "s_min",
    "series_new",
    "sigma",
    "spt_table",
    "sptbar_table",
    "theta_series",
    "triangular_series",
    "verify_series_identity",
]
