"""Truncated q-series with exact integer coefficients.

Every series here has integer exponents: fractional prefactors such as
q^(-1/24) or q^(-1/8) are cleared before a series is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .arith import sigma_values


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of q^0 .. q^precision, all exact Python ints."""

    coeffs: tuple[int, ...]
    precision: int

    def __post_init__(self):
        if self.precision < 0:
            raise ValueError(f"precision must be >= 0, got {self.precision}")
        if len(self.coeffs) != self.precision + 1:
            raise ValueError(
                f"expected {self.precision + 1} coefficients, got {len(self.coeffs)}"
            )

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.precision:
            raise IndexError(f"q^{n} is beyond precision {self.precision}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.precision + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return mul(self, other)

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(q^{self.precision + 1}))"

    def truncate(self, precision: int) -> TruncatedSeries:
        if precision > self.precision:
            raise ValueError("cannot raise precision by truncation")
        return TruncatedSeries(self.coeffs[: precision + 1], precision)

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(n, c) for n, c in enumerate(self.coeffs) if c]


def series_new(coeffs: Sequence[int], precision: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(int(c) for c in coeffs), precision)


def one(precision: int) -> TruncatedSeries:
    return TruncatedSeries((1,) + (0,) * precision, precision)


def from_terms(terms: Iterable[tuple[int, int]], precision: int) -> TruncatedSeries:
    """Build a series from (exponent, coefficient) pairs; later pairs add on."""
    coeffs = [0] * (precision + 1)
    for n, c in terms:
        if 0 <= n <= precision:
            coeffs[n] += c
    return TruncatedSeries(tuple(coeffs), precision)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product (schoolbook), result precision min(a, b).

    The outer loop runs over the nonzero terms of the sparser factor, so
    products with theta-like series cost O(#nonzero * N).
    """
    prec = min(a.precision, b.precision)
    a_terms = [(i, c) for i, c in enumerate(a.coeffs[: prec + 1]) if c]
    b_terms = [(i, c) for i, c in enumerate(b.coeffs[: prec + 1]) if c]
    if len(b_terms) < len(a_terms):
        a_terms, b = b_terms, a
    dense = np.array(b.coeffs[: prec + 1], dtype=object)
    out = np.zeros(prec + 1, dtype=object)
    for i, c in a_terms:
        out[i:] += c * dense[: prec + 1 - i]
    return TruncatedSeries(tuple(int(x) for x in out), prec)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term must be +1 or -1 to invert over Z, got {a0}")
    prec = a.precision
    terms = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    out = [0] * (prec + 1)
    out[0] = a0
    for n in range(1, prec + 1):
        acc = 0
        for k, c in terms:
            if k > n:
                break
            acc += c * out[n - k]
        # a0 is a unit, so dividing by it is multiplying by it
        out[n] = -a0 * acc
    return TruncatedSeries(tuple(out), prec)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    prec = min(a.precision, b.precision)
    return TruncatedSeries(
        tuple(x + y for x, y in zip(a.coeffs[: prec + 1], b.coeffs[: prec + 1])), prec
    )


def scale(a: TruncatedSeries, factor: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(factor * c for c in a.coeffs), a.precision)


def alternate(a: TruncatedSeries) -> TruncatedSeries:
    """Substitute q -> -q, i.e. multiply the q^n coefficient by (-1)^n."""
    return TruncatedSeries(
        tuple(-c if n & 1 else c for n, c in enumerate(a.coeffs)), a.precision
    )


def dilate(a: TruncatedSeries, factor: int, precision: int) -> TruncatedSeries:
    """Substitute q -> q^factor, keeping terms through q^precision."""
    return from_terms(((factor * n, c) for n, c in enumerate(a.coeffs)), precision)


def pentagonal_offsets(limit: int) -> list[tuple[int, int]]:
    """(k(3k+1)/2, (-1)^k) for all integers k with offset <= limit, sorted by offset."""
    out = [(0, 1)]
    k = 1
    while True:
        sign = -1 if k & 1 else 1
        lo = k * (3 * k - 1) // 2
        if lo > limit:
            break
        out.append((lo, sign))
        hi = k * (3 * k + 1) // 2
        if hi <= limit:
            out.append((hi, sign))
        k += 1
    return out


def euler_product_series(precision: int) -> TruncatedSeries:
    """prod_{n>=1} (1 - q^n), read off from the pentagonal number theorem."""
    if precision < 0:
        raise ValueError("precision must be >= 0")
    return from_terms(pentagonal_offsets(precision), precision)


def theta_series(precision: int) -> TruncatedSeries:
    """sum_{n in Z} (-1)^n q^(n^2) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2)."""
    if precision < 0:
        raise ValueError("precision must be >= 0")
    terms = [(0, 1)]
    n = 1
    while n * n <= precision:
        terms.append((n * n, -2 if n & 1 else 2))
        n += 1
    return from_terms(terms, precision)


def triangular_series(precision: int) -> TruncatedSeries:
    """sum_{n>=0} q^(n(n+1)/2)."""
    if precision < 0:
        raise ValueError("precision must be >= 0")
    terms = []
    k = 0
    while k * (k + 1) // 2 <= precision:
        terms.append((k * (k + 1) // 2, 1))
        k += 1
    return from_terms(terms, precision)


def e2_series(precision: int) -> TruncatedSeries:
    """E_2 = 1 - 24 sum sigma(n) q^n."""
    if precision < 0:
        raise ValueError("precision must be >= 0")
    sig = sigma_values(precision)
    return TruncatedSeries((1,) + tuple(-24 * sig[n] for n in range(1, precision + 1)), precision)
