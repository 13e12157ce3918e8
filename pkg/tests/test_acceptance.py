"""Exit criteria. Each test's docstring is the criterion line printed in the summary."""

import time

import pytest

from sptrec import analytic, arith
from sptrec import recurrences as R
from sptrec.partitions import oracle_tables
from sptrec.series import (
    TruncatedSeries,
    alternate,
    euler_product_series,
    invert,
    mul,
    pentagonal_offsets,
    series_new,
    theta_series,
    triangular_series,
)

pytestmark = pytest.mark.acceptance


@pytest.fixture(scope="module")
def oracle():
    return oracle_tables(60)


def test_euler_recurrence():
    """Euler recurrence: sum_k (-1)^k p(n - k(3k+1)/2) = 0 for 1 <= n <= 10^4, p from invert(euler_product); < 10 s"""
    t0 = time.perf_counter()
    N = 10_000
    p = invert(euler_product_series(N))
    offsets = pentagonal_offsets(N)
    for n in range(1, N + 1):
        assert sum(sign * p[n - off] for off, sign in offsets if off <= n) == 0, n
    assert time.perf_counter() - t0 < 10


def test_theorem1(oracle):
    """Theorem 1: euler_product * sum spt(n) q^n = sum a(n) q^n for n <= 2000; spt_table = spt_oracle for n <= 60; < 30 s"""
    t0 = time.perf_counter()
    N = 2000
    spt = R.spt_table(N)
    lhs = mul(euler_product_series(N), TruncatedSeries(spt.data, N))
    assert list(lhs.coeffs[1:]) == [arith.a_coeff(n) for n in range(1, N + 1)]
    assert spt.prefix(60).data == oracle["spt"].data
    assert time.perf_counter() - t0 < 30


def test_theorem2_and_corollary(oracle):
    """Theorem 2 + Corollary: theta * sum sptbar q^n = sum b(n) q^n and sptbar(N) = sum pbar(n) b(m) for N <= 2000; oracle to 40; b(1..8) = 2,0,4,-4,4,0,4,-8"""
    N = 2000
    sptbar = R.sptbar_table(N)
    b = [0] + [arith.b_coeff(n) for n in range(1, N + 1)]
    lhs = mul(theta_series(N), TruncatedSeries(sptbar.data, N))
    assert list(lhs.coeffs) == b
    conv = mul(invert(theta_series(N)), series_new(b, N))
    assert conv.coeffs == sptbar.data
    assert sptbar.prefix(40).data == oracle["sptbar"].data
    assert b[1:9] == [2, 0, 4, -4, 4, 0, 4, -8]


def test_theorem3_and_corollary(oracle):
    """Theorem 3 + Corollary: triangular * sum (-1)^m M2spt(m) q^m = sum c(n) q^n and the M2 convolution for N <= 2000; oracle to 60; c(2..6) = 1,1,3,3,4"""
    N = 2000
    m2spt = R.m2spt_table(N)
    c = [0] + [arith.c_coeff(n) for n in range(1, N + 1)]
    signed = alternate(TruncatedSeries(m2spt.data, N))
    lhs = mul(triangular_series(N), signed)
    assert list(lhs.coeffs) == c
    m2 = alternate(invert(triangular_series(N)))
    signed_c = alternate(series_new(c, N))
    conv = mul(m2, signed_c)
    assert conv.coeffs == m2spt.data
    for N_ in (1, 2, 3, 17, 2000):
        assert R.m2spt_convolution(N_) == m2spt[N_]
    assert m2spt.prefix(60).data == oracle["m2spt"].data
    assert c[2:7] == [1, 1, 3, 3, 4]


def test_generating_function_displays():
    """Generating functions: invert(theta)[0..6] = 1,2,4,8,14,24,40 and invert(triangular)[0..6] = 1,-1,1,-2,3,-4,5"""
    assert invert(theta_series(6)).coeffs == (1, 2, 4, 8, 14, 24, 40)
    assert invert(triangular_series(6)).coeffs == (1, -1, 1, -2, 3, -4, 5)


def test_gamma_lemma_numerics():
    """Gamma-integral lemma: |quadrature - closed form| <= 1e-8 on the 25-point (A, B) grid; < 5 s"""
    t0 = time.perf_counter()
    results = analytic.gamma_lemma_grid((0.1, 0.5, 1.0, 2.0, 10.0))
    assert len(results) == 25
    bad = [r.line() for r in results if not r.abs_error <= 1e-8]
    assert not bad, bad
    assert time.perf_counter() - t0 < 5


def test_projection_numerics():
    """Holomorphic projection: projected B(N) = -b(N) and projected C(N) = big_C(N) within 1e-6 for 1 <= N <= 200; < 60 s"""
    t0 = time.perf_counter()
    bad = []
    for N in range(1, 201):
        rb = analytic.projected_coefficient_B(N)
        rc = analytic.projected_coefficient_C(N)
        assert rb.target == -arith.b_coeff(N) and rc.target == arith.big_C(N)
        bad += [r.line() for r in (rb, rc) if not r.abs_error <= 1e-6]
    assert not bad, bad
    assert time.perf_counter() - t0 < 60


def test_spt_performance():
    """Performance: spt_table(10^5) in < 60 s with exact integers; values to 2000 equal the Theorem-1 series-derived values"""
    t0 = time.perf_counter()
    spt = R.spt_table(100_000)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60, elapsed
    assert spt.prefix(2000).data == R.spt_series_table(2000).data
    assert spt[100_000] > 2**1000
