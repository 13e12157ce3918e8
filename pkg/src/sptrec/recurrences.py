"""Euler-type recurrences for p, spt, sptbar1 and M2spt, plus identity checks.

Each recurrence has the shape

    sum_k sign(k) * f(n - offset(k)) = rhs(n)

with offset(0) = 0 and sign(0) = +1, so f(n) is isolated as
rhs(n) - sum_{k != 0} sign(k) f(n - offset(k)) and tables are filled
bottom-up in a flat list.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Sequence

from . import arith
from .partitions import OVERPARTITION_LIMIT, StatTable, sptbar_oracle
from .series import (
    TruncatedSeries,
    alternate,
    euler_product_series,
    invert,
    mul,
    one,
    pentagonal_offsets,
    series_new,
    theta_series,
    triangular_series,
)


@dataclass(frozen=True)
class RecurrenceSpec:
    name: str
    support: Callable[[int], list[tuple[int, int]]]  # limit -> [(offset, sign)] for k != 0
    rhs: Callable[[int], list[int]]  # N -> [rhs(0), ..., rhs(N)]
    seed: int  # f(0)

    def weights(self, limit: int) -> dict[int, int]:
        w: dict[int, int] = {}
        for off, sign in self.support(limit):
            w[off] = w.get(off, 0) + sign
        return {off: c for off, c in w.items() if c}


def _pentagonal_support(limit: int) -> list[tuple[int, int]]:
    return [(off, sign) for off, sign in pentagonal_offsets(limit) if off]


def _square_support(limit: int) -> list[tuple[int, int]]:
    out = []
    k = 1
    while k * k <= limit:
        sign = -1 if k & 1 else 1
        out += [(k * k, sign), (k * k, sign)]  # k and -k
        k += 1
    return out


def _triangular_support(limit: int) -> list[tuple[int, int]]:
    out = []
    k = 1
    while k * (k + 1) // 2 <= limit:
        t = k * (k + 1) // 2
        out.append((t, -1 if t & 1 else 1))
        k += 1
    return out


def _signed_c_values(N: int) -> list[int]:
    return [-c if n & 1 else c for n, c in enumerate(arith.c_values(N))]


EULER = RecurrenceSpec("euler", _pentagonal_support, lambda N: [0] * (N + 1), seed=1)
THM1 = RecurrenceSpec("thm1", _pentagonal_support, arith.a_values, seed=0)
THM2 = RecurrenceSpec("thm2", _square_support, arith.b_values, seed=0)
THM3 = RecurrenceSpec("thm3", _triangular_support, _signed_c_values, seed=0)


def solve_recurrence(spec: RecurrenceSpec, N: int) -> list[int]:
    if N < 0:
        raise ValueError("N must be >= 0")
    rhs = spec.rhs(N)
    groups: dict[int, list[int]] = {}
    for off, w in sorted(spec.weights(N).items()):
        groups.setdefault(w, []).append(off)
    grouped = [(w, offs) for w, offs in groups.items()]

    vals = [0] * (N + 1)
    vals[0] = spec.seed
    for n in range(1, N + 1):
        acc = rhs[n]
        for w, offs in grouped:
            cnt = bisect_right(offs, n)
            if cnt:
                s = sum([vals[n - o] for o in offs[:cnt]])
                acc -= s if w == 1 else (-s if w == -1 else w * s)
        vals[n] = acc
    return vals


def p_table(N: int) -> StatTable:
    return StatTable("p", tuple(solve_recurrence(EULER, N)))


def spt_table(N: int) -> StatTable:
    return StatTable("spt", tuple(solve_recurrence(THM1, N)))


def sptbar_table(N: int) -> StatTable:
    return StatTable("sptbar", tuple(solve_recurrence(THM2, N)))


def m2spt_table(N: int) -> StatTable:
    return StatTable("m2spt", tuple(solve_recurrence(THM3, N)))


# ---------------------------------------------------------------------------
# Generating-function routes


def pbar_series(N: int) -> TruncatedSeries:
    return invert(theta_series(N))


def m2_series(N: int) -> TruncatedSeries:
    """sum M2(n) q^n, the inverse of the triangular series with q -> -q."""
    return alternate(invert(triangular_series(N)))


def p_series_table(N: int) -> StatTable:
    return StatTable("p", invert(euler_product_series(N)).coeffs)


def spt_series_table(N: int) -> StatTable:
    """spt from (prod (1 - q^n))^-1 * sum a(n) q^n."""
    a = series_new(arith.a_values(N), N)
    return StatTable("spt", mul(invert(euler_product_series(N)), a).coeffs)


def sptbar_convolution(N: int) -> int:
    """sum_{n+m=N} pbar(n) b(m)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    pbar = pbar_series(N)
    b = arith.b_values(N)
    return sum(pbar[N - m] * b[m] for m in range(1, N + 1))


def m2spt_convolution(N: int) -> int:
    """sum_{n+m=N} (-1)^m M2(n) c(m)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    m2 = m2_series(N)
    c = arith.c_values(N)
    return sum((-1 if m & 1 else 1) * m2[N - m] * c[m] for m in range(1, N + 1))


def sptbar_convolution_table(N: int) -> StatTable:
    b = series_new(arith.b_values(N), N)
    return StatTable("sptbar", mul(pbar_series(N), b).coeffs)


def m2spt_convolution_table(N: int) -> StatTable:
    c = series_new(_signed_c_values(N), N)
    return StatTable("m2spt", mul(m2_series(N), c).coeffs)


# ---------------------------------------------------------------------------
# Verification


class Identity(str, enum.Enum):
    EULER = "euler"
    THM1 = "thm1"
    THM2 = "thm2"
    THM3 = "thm3"


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    start: int
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    @property
    def stop(self) -> int:
        return self.start + len(self.lhs) - 1

    @property
    def first_failure(self) -> int | None:
        for i, (x, y) in enumerate(zip(self.lhs, self.rhs)):
            if x != y:
                return self.start + i
        return None

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def row(self, n: int) -> tuple[int, int]:
        i = n - self.start
        return self.lhs[i], self.rhs[i]

    def summary(self) -> str:
        bad = self.first_failure
        if bad is None:
            return f"{self.identity}: pass for n = {self.start}..{self.stop}"
        lhs, rhs = self.row(bad)
        return f"{self.identity}: FAIL at n = {bad}: lhs = {lhs}, rhs = {rhs}"


def compare_tables(name: str, lhs: Sequence[int], rhs: Sequence[int], start: int = 1) -> VerificationReport:
    if len(lhs) != len(rhs):
        raise ValueError(f"{name}: length mismatch {len(lhs)} vs {len(rhs)}")
    return VerificationReport(name, start, tuple(lhs), tuple(rhs))


def verify_series_identity(identity: Identity | str, precision: int) -> VerificationReport:
    """Multiply base series by the statistic's series and compare with the divisor-sum side."""
    identity = Identity(identity)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    N = precision
    if identity is Identity.EULER:
        base, stat, rhs = euler_product_series(N), p_table(N).data, one(N).coeffs
    elif identity is Identity.THM1:
        base, stat, rhs = euler_product_series(N), spt_table(N).data, arith.a_values(N)
    elif identity is Identity.THM2:
        base, stat, rhs = theta_series(N), sptbar_table(N).data, arith.b_values(N)
    else:
        base = triangular_series(N)
        stat = alternate(TruncatedSeries(m2spt_table(N).data, N)).coeffs
        rhs = arith.c_values(N)
    lhs = mul(base, TruncatedSeries(tuple(stat), N))
    return VerificationReport(identity.value, 1, lhs.coeffs[1:], tuple(rhs[1:]))


def theta_k_range_readings(n_max: int = 12) -> dict[str, bool]:
    """Test the sptbar recurrence over all k in Z and over k >= 0 against enumeration.

    Raises if the all-integers reading fails, since every table here relies on it.
    """
    if n_max > OVERPARTITION_LIMIT:
        raise ValueError(f"n_max must be <= {OVERPARTITION_LIMIT}")
    f = [0] + [sptbar_oracle(n) for n in range(1, n_max + 1)]
    b = arith.b_values(n_max)
    readings = {}
    for name, ks in (("all_k", None), ("k_nonnegative", 0)):
        ok = True
        for n in range(1, n_max + 1):
            total = 0
            k = -n if ks is None else 0
            while k <= n:
                if k * k <= n:
                    total += (-1) ** (k & 1) * f[n - k * k]
                k += 1
            ok = ok and total == b[n]
        readings[name] = ok
    if not readings["all_k"]:
        raise AssertionError("sptbar recurrence over all k in Z disagrees with enumeration")
    return readings
