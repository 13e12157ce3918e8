"""Divisor sums, the character (12|.), and the coefficient functions a, b, c, C.

Scalar functions use plain trial division and are the reference
definitions. The ``*_values`` functions build whole tables with sieves
and are checked against the scalar versions in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

import numpy as np


def _as_positive_int(x) -> int | None:
    """Return x as an int if it is a positive integer, else None.

    Accepts ints and exact rationals; anything off the positive integers
    maps to None so callers can apply the s(x) = 0 convention.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a valid argument")
    if isinstance(x, int):
        return x if x > 0 else None
    if isinstance(x, Rational):
        x = Fraction(x)
        if x.denominator == 1 and x.numerator > 0:
            return x.numerator
        return None
    raise TypeError(f"expected an int or exact rational, got {type(x).__name__}")


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(x) -> int:
    """Sum of divisors; 0 when x is not a positive integer."""
    n = _as_positive_int(x)
    if n is None:
        return 0
    return sum(divisors(n))


def s_min(x) -> int:
    """sum_{d | n} min(d, n/d); 0 when x is not a positive integer."""
    n = _as_positive_int(x)
    if n is None:
        return 0
    return sum(min(d, n // d) for d in divisors(n))


_KRON12 = (0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1)


def kronecker12(m: int) -> int:
    """The real character mod 12: +1 on m = +-1, -1 on m = +-5, else 0."""
    return _KRON12[m % 12]


def delta_square(n: int) -> int:
    if n < 0:
        return 0
    r = math.isqrt(n)
    return 1 if r * r == n else 0


def a_coeff(n: int) -> int:
    """a(n) = -sum over ab = 6n, 0 < a < b of (12 | b^2 - a^2) * a."""
    if n < 1:
        raise ValueError(f"a(n) is defined for n >= 1, got {n}")
    m = 6 * n
    total = 0
    for a in divisors(m):
        b = m // a
        if a >= b:
            break
        total += kronecker12(b * b - a * a) * a
    return -total


def b_coeff(n: int) -> int:
    if n < 1:
        raise ValueError(f"b(n) is defined for n >= 1, got {n}")
    sign = 1 if n & 1 else -1
    if n & 1:
        return sign * 2 * s_min(n)
    if n % 4 == 0:
        return sign * 4 * s_min(n // 4)
    return 0


def c_coeff(n: int) -> int:
    """c(n) = sigma(n) - sigma(n/2) - s(2n)/2 + s(n/2), computed as 2c(n) then halved."""
    if n < 1:
        raise ValueError(f"c(n) is defined for n >= 1, got {n}")
    half = Fraction(n, 2)
    twice = 2 * sigma(n) - 2 * sigma(half) - s_min(2 * n) + 2 * s_min(half)
    assert twice % 2 == 0, f"2c({n}) = {twice} is odd"
    return twice // 2


def big_C_pairs(N: int) -> int:
    """sum of u over uv = 2N with u < v and u + v odd."""
    m = 2 * N
    total = 0
    for u in divisors(m):
        v = m // u
        if u >= v:
            break
        if (u + v) & 1:
            total += u
    return total


def big_C(N: int) -> int:
    """C(N) = s(2N)/2 - s(N/2), cross-checked against the factor-pair sum."""
    if N < 1:
        raise ValueError(f"C(N) is defined for N >= 1, got {N}")
    twice = s_min(2 * N) - 2 * s_min(Fraction(N, 2))
    assert twice % 2 == 0, f"2C({N}) = {twice} is odd"
    closed = twice // 2
    pairs = big_C_pairs(N)
    assert closed == pairs, f"C({N}): closed form {closed} != factor-pair sum {pairs}"
    return closed


# ---------------------------------------------------------------------------
# Sieved tables, index 0..N with entry 0 set to 0.


def sigma_values(N: int) -> list[int]:
    out = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        out[d::d] += d
    return [int(x) for x in out]


def s_values(N: int) -> list[int]:
    out = np.zeros(N + 1, dtype=np.int64)
    d = 1
    while d * d <= N:
        out[d * d] += d
        e = np.arange(d + 1, N // d + 1, dtype=np.int64)
        out[d * e] += 2 * d
        d += 1
    return [int(x) for x in out]


def a_values(N: int) -> list[int]:
    out = np.zeros(N + 1, dtype=np.int64)
    kron = np.array(_KRON12, dtype=np.int64)
    top = 6 * N
    a = 1
    while a * a < top:
        step = 6 // math.gcd(a, 6)
        first = (a // step + 1) * step  # least multiple of step above a
        b = np.arange(first, top // a + 1, step, dtype=np.int64)
        if b.size:
            n = a * b // 6
            out[n] -= kron[(b * b - a * a) % 12] * a
        a += 1
    return [int(x) for x in out]


def b_values(N: int) -> list[int]:
    s = s_values(N)
    out = [0] * (N + 1)
    for n in range(1, N + 1):
        if n & 1:
            out[n] = 2 * s[n]
        elif n % 4 == 0:
            out[n] = -4 * s[n // 4]
    return out


def big_C_values(N: int) -> list[int]:
    s = s_values(2 * N)
    out = [0] * (N + 1)
    for n in range(1, N + 1):
        twice = s[2 * n] - (2 * s[n // 2] if n % 2 == 0 else 0)
        assert twice % 2 == 0
        out[n] = twice // 2
    return out


def c_values(N: int) -> list[int]:
    sig = sigma_values(N)
    bigc = big_C_values(N)
    out = [0] * (N + 1)
    for n in range(1, N + 1):
        out[n] = sig[n] - (sig[n // 2] if n % 2 == 0 else 0) - bigc[n]
    return out
