"""Foundational special functions.

Log-gamma and log-factorial in double precision, the principal branch of
Lambert W, a numerical inverse of the gamma function on its increasing
branch (seeded by a Lambert-W based asymptotic guess), and exact-rational
Bernoulli numbers with the zeta values at negative odd integers they
encode.

Everything here is pure and stateless; the Bernoulli table is built once
and never mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scipy.special import digamma

from .errors import CapacityError, DomainError, NumericError

__all__ = [
    "log_gamma",
    "log_factorial",
    "lambert_w",
    "BernoulliTable",
    "bernoulli_table",
    "zeta_neg_odd",
    "InverseGammaSeed",
    "inverse_gamma_seed",
    "inverse_gamma",
    "inverse_gamma_log",
]

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# log(n!) for n <= 20 from exact integer factorials.
_LOG_FACTORIAL_TABLE = [math.log(math.factorial(n)) if n > 1 else 0.0 for n in range(21)]


def log_gamma(x: float) -> float:
    """log of the gamma function for real x > 0.

    Backed by the C library's lgamma (rational approximation for moderate
    arguments, Stirling branch for large ones), which meets double-precision
    relative accuracy across [1e-3, 1e308].
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"log_gamma requires a finite real argument, got {x!r}")
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def log_factorial(n: int) -> float:
    """log(n!) = log_gamma(n+1); exact small-n table, lgamma branch above."""
    if n < 0:
        raise DomainError(f"log_factorial requires n >= 0, got {n}")
    n = int(n)
    if n <= 20:
        return _LOG_FACTORIAL_TABLE[n]
    return math.lgamma(n + 1.0)


# ---------------------------------------------------------------------------
# Lambert W, principal branch
# ---------------------------------------------------------------------------

_BRANCH_POINT = -math.exp(-1.0)


def lambert_w(z: float) -> float:
    """Principal branch of Lambert W: the w >= -1 with w*exp(w) = z.

    Halley iteration from a series/log-based initial guess; for large z the
    equation is solved in log form (w + log w = log z) to avoid overflow.
    Accurate to ~1e-15 relative in the defining identity.
    """
    if not math.isfinite(z):
        raise DomainError(f"lambert_w requires a finite argument, got {z!r}")
    if z < _BRANCH_POINT:
        raise DomainError(f"lambert_w requires z >= -1/e = {_BRANCH_POINT:.17g}, got {z}")
    if z == 0.0:
        return 0.0

    if z >= 3.0:
        # Solve w + log(w) = log(z) by Newton; immune to exp overflow.
        logz = math.log(z)
        w = logz - math.log(logz)
        for _ in range(50):
            step = (w + math.log(w) - logz) / (1.0 + 1.0 / w)
            w -= step
            if abs(step) <= 2e-16 * (1.0 + abs(w)):
                break
        return w

    # Initial guess: branch-point series near -1/e, else a crude seed that
    # Halley cleans up in a handful of iterations.
    if z < -0.2:
        p = math.sqrt(2.0 * (math.e * z + 1.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 * p**3 / 72.0
        if w <= -1.0:
            w = -1.0 + 1e-12
    elif z < 1.0:
        w = z * (1.0 - z)  # two Taylor terms of W at 0
    else:
        w = 0.5

    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - z
        w1 = w + 1.0
        denom = ew * w1 - (w + 2.0) * f / (2.0 * w1)
        if denom == 0.0:
            break
        dw = f / denom
        w -= dw
        if abs(dw) <= 2e-16 * (1.0 + abs(w)):
            break
    return w


# ---------------------------------------------------------------------------
# Bernoulli numbers and zeta at negative odd integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BernoulliTable:
    """Even-index Bernoulli numbers B_0, B_2, ..., B_max_index as exact Fractions."""

    max_index: int
    values: tuple  # values[k] == B_{2k}

    def bernoulli(self, index: int) -> Fraction:
        """B_index for an even index within capacity."""
        if index % 2 != 0 or index < 0:
            raise DomainError(f"only nonnegative even Bernoulli indices are stored, got {index}")
        if index > self.max_index:
            raise CapacityError(
                f"Bernoulli table holds indices up to {self.max_index}; index {index} requested"
            )
        return self.values[index // 2]


@lru_cache(maxsize=None)
def bernoulli_table(max_index: int = 64) -> BernoulliTable:
    """Build the even-index Bernoulli table via the binomial recurrence.

    Uses sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_1 = -1/2; odd B_j vanish
    beyond that, so only even rows are kept.
    """
    if max_index < 0 or max_index % 2 != 0:
        raise DomainError(f"max_index must be a nonnegative even integer, got {max_index}")
    evens = [Fraction(1)]  # B_0
    for m in range(1, max_index // 2 + 1):
        n = 2 * m
        acc = Fraction(n + 1, 1) * Fraction(-1, 2)  # the B_1 term
        for j in range(m):
            acc += math.comb(n + 1, 2 * j) * evens[j]
        evens.append(-acc / (n + 1))
    return BernoulliTable(max_index=max_index, values=tuple(evens))


def zeta_neg_odd(k: int, table: BernoulliTable | None = None) -> Fraction:
    """Exact rational zeta(-2k-1) = -B_{2k+2}/(2k+2) for integer k >= 0."""
    if k < 0:
        raise DomainError(f"zeta_neg_odd requires k >= 0, got {k}")
    if table is None:
        table = bernoulli_table()
    index = 2 * k + 2
    if index > table.max_index:
        raise CapacityError(
            f"zeta(-{2 * k + 1}) needs Bernoulli index {index}, "
            f"table capacity is {table.max_index}"
        )
    return -table.bernoulli(index) / index


# ---------------------------------------------------------------------------
# Inverse gamma function on the increasing branch
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InverseGammaSeed:
    """Asymptotic initial guess for the inverse gamma function at x.

    With v = x/sqrt(2*pi), w = W((log v)/e) and u0 = (log v)/w, the value
    u0 + 1/2 approximates the inverse; by construction u0 satisfies
    u0*log(u0) - u0 = log(v).
    """

    x: float
    v: float
    w: float
    u0: float
    seed: float


def _seed_from_log(log_x: float) -> tuple[float, float, float]:
    """(w, u0, seed) for inverse-gamma Newton, from log(x)."""
    log_v = log_x - _LOG_SQRT_2PI
    w = lambert_w(log_v / math.e)
    u0 = log_v / w
    return w, u0, u0 + 0.5


def inverse_gamma_seed(x: float) -> InverseGammaSeed:
    """Seed object for inverse_gamma; requires x >= 2."""
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"inverse_gamma_seed requires a finite argument, got {x!r}")
    if x < 2.0:
        raise DomainError(f"inverse_gamma_seed requires x >= 2, got {x}")
    log_x = math.log(x)
    w, u0, seed = _seed_from_log(log_x)
    return InverseGammaSeed(x=float(x), v=x / math.sqrt(2.0 * math.pi), w=w, u0=u0, seed=seed)


def inverse_gamma_log(log_x: float) -> float:
    """Solve log_gamma(g) = log_x for g >= 3, given log_x = log(x), x >= 2.

    Newton iteration on log-gamma seeded by the asymptotic guess, with a
    bisection fallback if Newton stalls. Working in log space keeps the
    iteration well-posed for x far beyond double-precision overflow of
    gamma itself.
    """
    if not math.isfinite(log_x):
        raise DomainError(f"inverse_gamma_log requires finite log_x, got {log_x!r}")
    if log_x < math.log(2.0):
        raise DomainError(
            f"inverse_gamma is restricted to x >= 2 (log_x >= {math.log(2.0):.6f}), got {log_x}"
        )
    _, _, g = _seed_from_log(log_x)
    g = max(g, 2.0)
    tol = max(1e-14, 8.0 * 2.220446049250313e-16 * abs(log_x))

    converged = False
    for _ in range(50):
        resid = math.lgamma(g) - log_x
        if abs(resid) <= tol:
            converged = True
            break
        step = resid / float(digamma(g))
        g_new = g - step
        if g_new < 2.0:
            g_new = 0.5 * (g + 2.0)
        g = g_new
    if converged or abs(math.lgamma(g) - log_x) <= tol:
        return float(g)

    # Bisection fallback on the monotone branch.
    lo, hi = 2.0, max(4.0, 2.0 * g)
    while math.lgamma(hi) < log_x:
        hi *= 2.0
        if hi > 1e18:
            raise NumericError("inverse_gamma bisection bracket exhausted")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if math.lgamma(mid) < log_x:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, lo):
            break
    g = 0.5 * (lo + hi)
    if abs(math.lgamma(g) - log_x) > 100 * tol:
        raise NumericError(f"inverse_gamma failed to converge at log_x={log_x}")
    return g


def inverse_gamma(x: float) -> float:
    """The unique g >= 3 with gamma(g) = x, for x >= 2."""
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"inverse_gamma requires a finite argument, got {x!r}")
    if x < 2.0:
        raise DomainError(f"inverse_gamma is restricted to x >= 2, got {x}")
    return inverse_gamma_log(math.log(x))
