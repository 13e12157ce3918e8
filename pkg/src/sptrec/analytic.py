"""Floating-point checks of the holomorphic-projection computations.

Everything here is binary64. Integrals over (0, inf) are taken in the
variable t = sqrt(y), which removes the y^(-1/2) singularity that both
the incomplete gamma profile and the square-N term carry at y = 0, and
are cut off where the exponential factor has fallen below e^-64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, special

from . import arith

SQRT_PI = math.sqrt(math.pi)
FOUR_PI = 4.0 * math.pi

# exp(-x) underflows to 0 in binary64 past this
_EXP_UNDERFLOW = 745.0
# t-range cut: integrand carries exp(-(t/scale)^2), exp(-64) is negligible
_TAIL_STDS = 8.0


@dataclass(frozen=True)
class NumericCheckResult:
    name: str
    params: dict = field(default_factory=dict)
    value: float = 0.0
    target: float = 0.0
    abs_error: float = 0.0
    rel_error: float = 0.0
    tolerance: float = 0.0
    passed: bool = False

    def line(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        flag = "pass" if self.passed else "FAIL"
        return (
            f"{flag} {self.name}({args}): value={self.value:.12g} target={self.target:.12g} "
            f"abs_err={self.abs_error:.3g} tol={self.tolerance:g}"
        )


def make_result(name: str, params: dict, value: float, target: float, tolerance: float) -> NumericCheckResult:
    abs_error = abs(value - target)
    rel_error = abs_error / abs(target) if target else (0.0 if abs_error == 0 else math.inf)
    passed = abs_error <= tolerance or rel_error <= tolerance
    return NumericCheckResult(name, dict(params), float(value), float(target), abs_error, rel_error, tolerance, passed)


# ---------------------------------------------------------------------------
# beta(y) = Gamma(-1/2, 4 pi y)


def beta_incomplete(y):
    """Gamma(-1/2, 4*pi*y) for y > 0; accepts scalars or arrays.

    Uses Gamma(-1/2, x) = 2 e^-x / sqrt(x) - 2 sqrt(pi) erfc(sqrt(x)),
    written as e^-x (2/sqrt(x) - 2 sqrt(pi) erfcx(sqrt(x))) so the two
    terms never underflow separately at large x.
    """
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr <= 0):
        raise ValueError("beta_incomplete needs y > 0")
    x = FOUR_PI * y_arr
    r = np.sqrt(x)
    out = np.exp(-x) * (2.0 / r - 2.0 * SQRT_PI * special.erfcx(r))
    return float(out) if np.ndim(out) == 0 else out


def beta_finite_part(y):
    """beta(y) minus its y -> 0 singular part 2 e^-x / sqrt(x); tends to -2 sqrt(pi)."""
    return -2.0 * SQRT_PI * special.erfc(np.sqrt(FOUR_PI * np.asarray(y, dtype=float)))


def beta_asymptotic(y):
    """Leading large-y behaviour (4 pi y)^(-3/2) e^(-4 pi y)."""
    x = FOUR_PI * np.asarray(y, dtype=float)
    return x ** -1.5 * np.exp(-x)


def beta_by_quadrature(y: float) -> float:
    """Independent evaluation: integral of t^(-3/2) e^-t over (4 pi y, inf)."""
    x0 = FOUR_PI * y
    # substitute t = x0 + u to keep the integrand O(1) near the lower end
    val, _ = integrate.quad(
        lambda u: (x0 + u) ** -1.5 * math.exp(-u), 0.0, math.inf, epsabs=0.0, epsrel=1e-13, limit=200
    )
    return math.exp(-x0) * val


# ---------------------------------------------------------------------------
# Integration helpers


def _integrate_t(f_y, scales: list[float], t_max: float) -> float:
    """Integrate f(y) dy over (0, inf) as 2 t f(t^2) dt over (0, t_max)."""
    pts = sorted({s for s in scales if 0 < s < t_max} | {min(4 * s, t_max) for s in scales if 4 * s < t_max})
    val, _ = integrate.quad(
        lambda t: 2.0 * t * f_y(t * t) if t > 0 else 0.0,
        0.0,
        t_max,
        points=pts or None,
        epsabs=1e-14,
        epsrel=1e-12,
        limit=500,
    )
    return val


def gamma_lemma_closed_form(A: float, B: float) -> float:
    """(1 / (2 sqrt(pi) B)) (sqrt(1 + B/A) - 1)."""
    return (math.sqrt(1.0 + B / A) - 1.0) / (2.0 * SQRT_PI * B)


def gamma_integral(A: float, B: float) -> float:
    """Quadrature of beta(A y) e^(-4 pi B y) over y in (0, inf)."""
    if A <= 0 or B <= 0:
        raise ValueError("A and B must be positive")
    scale = 1.0 / math.sqrt(FOUR_PI * (A + B))
    return _integrate_t(
        lambda y: beta_incomplete(A * y) * math.exp(-FOUR_PI * B * y),
        [scale, 1.0 / math.sqrt(FOUR_PI * A)],
        _TAIL_STDS * scale,
    )


def gamma_integral_check(A: float, B: float, tolerance: float = 1e-8) -> NumericCheckResult:
    if A <= 0 or B <= 0:
        raise ValueError("A and B must be positive")
    return make_result("gamma_lemma", {"A": A, "B": B}, gamma_integral(A, B), gamma_lemma_closed_form(A, B), tolerance)


# ---------------------------------------------------------------------------
# Non-holomorphic coefficients B(N, y) and C(N, y)


def square_difference_pairs(N: int) -> list[tuple[int, int]]:
    """All (n, m) with n^2 - m^2 = N and n, m >= 1 (n > m when N > 0, m > n when N < 0)."""
    if N == 0:
        raise ValueError("N = 0 has infinitely many solutions")
    M = abs(N)
    pairs = []
    for d in arith.divisors(M):
        e = M // d
        if d >= e:
            break
        if (d + e) & 1:
            continue
        big, small = (e + d) // 2, (e - d) // 2
        pairs.append((big, small) if N > 0 else (small, big))
    return pairs


def odd_square_difference_pairs(M: int) -> list[tuple[int, int]]:
    """(n, m) with n^2 - m^2 = M, n > m >= 1, both odd."""
    if M <= 0:
        return []
    return [(n, m) for n, m in square_difference_pairs(M) if n & 1 and m & 1]


def _zero_mode_terms(y: float) -> np.ndarray:
    m_max = max(1, int(math.sqrt(_EXP_UNDERFLOW / (FOUR_PI * y))) + 1)
    return np.arange(1, m_max + 1, dtype=float)


def B_coefficient(N: int, y: float) -> float:
    """Coefficient of q^N in the non-holomorphic part attached to sptbar1."""
    if y <= 0:
        raise ValueError("y must be positive")
    sign = -1.0 if N & 1 else 1.0
    if N == 0:
        m = _zero_mode_terms(y)
        total = 1.0 / (2.0 * math.sqrt(math.pi * y)) + 2.0 * float(np.sum(m * beta_incomplete(m * m * y)))
        return total / SQRT_PI
    total = 0.0
    for n, m in square_difference_pairs(N):
        total += 2.0 * m * beta_incomplete(m * m * y)
    if arith.delta_square(abs(N)):
        if N > 0:
            total += 1.0 / math.sqrt(math.pi * y)
        else:
            total += math.sqrt(-N) * beta_incomplete(-N * y)
    return sign * total / SQRT_PI


def C_coefficient(N: int, y: float) -> float:
    """(1 / (4 sqrt(pi))) sum over odd n^2 - m^2 = 8N of m beta(m^2 y / 8)."""
    if y <= 0:
        raise ValueError("y must be positive")
    if N == 0:
        m = _zero_mode_terms(y / 8.0)
        m = m[m.astype(int) & 1 == 1]
        return float(np.sum(m * beta_incomplete(m * m * y / 8.0))) / (4.0 * SQRT_PI)
    if N > 0:
        pairs = odd_square_difference_pairs(8 * N)
    else:
        pairs = [(n, m) for m, n in odd_square_difference_pairs(-8 * N)]
    total = sum(m * beta_incomplete(m * m * y / 8.0) for _, m in pairs)
    return total / (4.0 * SQRT_PI)


def projection_weight(k: int, m: int) -> float:
    """(4 pi m)^(k-1) / (k-2)!."""
    if k < 2:
        raise ValueError("holomorphic projection needs weight k >= 2")
    if m < 1:
        raise ValueError("m must be a positive integer")
    return (FOUR_PI * m) ** (k - 1) / math.factorial(k - 2)


# ---------------------------------------------------------------------------
# Projected coefficients


def projected_B_value(N: int) -> float:
    """4 pi N * integral of B(N, y) e^(-4 pi N y) over (0, inf)."""
    pairs = square_difference_pairs(N)
    square = bool(arith.delta_square(N))
    sign = -1.0 if N & 1 else 1.0
    ms = np.array([m for _, m in pairs], dtype=float)

    def f(y: float) -> float:
        total = 2.0 * float(np.sum(ms * beta_incomplete(ms * ms * y))) if ms.size else 0.0
        if square:
            total += 1.0 / math.sqrt(math.pi * y)
        return sign * total / SQRT_PI * math.exp(-FOUR_PI * N * y)

    if not pairs and not square:
        return 0.0
    slow = 1.0 / math.sqrt(FOUR_PI * N)
    scales = [slow] + [1.0 / math.sqrt(FOUR_PI * (m * m + N)) for m in ms]
    return projection_weight(2, N) * _integrate_t(f, scales, _TAIL_STDS * slow)


def projected_coefficient_B(N: int, tolerance: float = 1e-6) -> NumericCheckResult:
    if not 1 <= N <= 200:
        raise ValueError("N must be in 1..200")
    return make_result("proj_b", {"N": N}, projected_B_value(N), -arith.b_coeff(N), tolerance)


def projected_C_value(N: int) -> float:
    """sqrt(pi) N * integral of sum m beta(m^2 y / 8) e^(-4 pi N y) over (0, inf)."""
    ms = np.array([m for _, m in odd_square_difference_pairs(8 * N)], dtype=float)
    if not ms.size:
        return 0.0

    def f(y: float) -> float:
        return float(np.sum(ms * beta_incomplete(ms * ms * y / 8.0))) * math.exp(-FOUR_PI * N * y)

    slow = 1.0 / math.sqrt(FOUR_PI * N)
    scales = [slow] + [1.0 / math.sqrt(FOUR_PI * (m * m / 8.0 + N)) for m in ms]
    return SQRT_PI * N * _integrate_t(f, scales, _TAIL_STDS * slow)


def projected_coefficient_C(N: int, tolerance: float = 1e-6) -> NumericCheckResult:
    if not 1 <= N <= 200:
        raise ValueError("N must be in 1..200")
    return make_result("proj_c", {"N": N}, projected_C_value(N), arith.big_C(N), tolerance)


def projected_B_termwise(N: int, tolerance: float = 1e-8) -> list[NumericCheckResult]:
    """Each (n, m) term of the projected coefficient, quadrature vs the gamma lemma.

    Both sides carry the factor (-1)^N 8 sqrt(pi) N m, so each closed-form
    value is (-1)^N 4 (n - m).
    """
    sign = -1.0 if N & 1 else 1.0
    out = []
    for n, m in square_difference_pairs(N):
        factor = sign * 8.0 * SQRT_PI * N * m
        quad = factor * gamma_integral(float(m * m), float(N))
        closed = factor * gamma_lemma_closed_form(float(m * m), float(N))
        out.append(make_result("proj_b_term", {"N": N, "n": n, "m": m}, quad, closed, tolerance))
    return out


# ---------------------------------------------------------------------------
# Profiles


DEFAULT_GRID = (0.1, 0.5, 1.0, 2.0, 10.0)


def gamma_lemma_grid(grid=DEFAULT_GRID, tolerance: float = 1e-8) -> list[NumericCheckResult]:
    return [gamma_integral_check(A, B, tolerance) for A in grid for B in grid]


def beta_asymptotic_ratios(lo: float = 2.0, hi: float = 5.0, count: int = 20) -> tuple[np.ndarray, np.ndarray]:
    ys = np.linspace(lo, hi, count)
    return ys, beta_incomplete(ys) / beta_asymptotic(ys)


def beta_asymptotic_check(lo: float = 2.0, hi: float = 5.0, count: int = 20) -> NumericCheckResult:
    """Ratio beta / leading asymptotic lies in [0.8, 1.0] and increases towards 1."""
    ys, ratios = beta_asymptotic_ratios(lo, hi, count)
    in_band = bool(np.all((ratios >= 0.8) & (ratios <= 1.0)))
    increasing = bool(np.all(np.diff(ratios) > 0))
    worst = float(1.0 - ratios.min())
    res = make_result("beta_asym", {"lo": lo, "hi": hi, "count": count}, float(ratios.min()), 1.0, 0.2)
    return NumericCheckResult(
        res.name, res.params, res.value, res.target, worst, worst, 0.2, in_band and increasing
    )


def B_small_y_profile(N: int, lo: float = 1e-6, hi: float = 1e-2, count: int = 50) -> dict:
    """Samples of sqrt(y) * B(N, y) near y = 0, with the limit it should approach.

    Each m beta(m^2 y) behaves like 1/sqrt(pi y), so sqrt(y) B(N, y) tends to
    (-1)^N (2 * #pairs + delta(N)) / pi.
    """
    ys = np.geomspace(lo, hi, count)
    vals = np.array([math.sqrt(y) * B_coefficient(N, y) for y in ys])
    sign = -1.0 if N & 1 else 1.0
    limit = sign * (2 * len(square_difference_pairs(N)) + arith.delta_square(N)) / math.pi
    return {"N": N, "max_abs": float(np.max(np.abs(vals))), "limit": limit, "at_lo": float(vals[0])}
