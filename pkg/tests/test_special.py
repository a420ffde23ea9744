"""Special-function floor: log-gamma, Lambert W, Bernoulli, inverse gamma."""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu_series.errors import CapacityError, DomainError
from mathieu_series.special import (
    bernoulli_table,
    inverse_gamma,
    inverse_gamma_log,
    inverse_gamma_seed,
    lambert_w,
    log_factorial,
    log_gamma,
    zeta_neg_odd,
)


# ---------------------------------------------------------------------------
# log_gamma / log_factorial
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "x,expected",
    [(1.0, 0.0), (5.0, math.log(24.0)), (0.5, 0.5 * math.log(math.pi))],
)
def test_log_gamma_exact_points(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-14, abs=1e-15)


def test_log_gamma_accuracy_grid():
    # moderate range: rel error <= 1e-14 against mpmath
    for x in np.geomspace(1e-3, 1e6, 40):
        ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
        assert log_gamma(float(x)) == pytest.approx(ref, rel=1e-14, abs=5e-16)
    # large-argument branch: rel error <= 1e-13
    for x in (1e7, 1e20, 1e100, 1e300):
        ref = float(mpmath.loggamma(mpmath.mpf(x)))
        assert log_gamma(x) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_log_gamma_domain(bad):
    with pytest.raises(DomainError):
        log_gamma(bad)


def test_log_factorial_small_and_large():
    assert log_factorial(0) == 0.0
    assert log_factorial(3) == pytest.approx(math.log(6.0), rel=1e-15)
    exact = math.factorial(170)
    # compare against the exact big integer through its logarithm
    ref = Fraction(exact)
    assert log_factorial(170) == pytest.approx(math.log(ref), rel=1e-13)
    with pytest.raises(DomainError):
        log_factorial(-1)


# ---------------------------------------------------------------------------
# Lambert W
# ---------------------------------------------------------------------------


def _lambert_fixed_point_oracle():
    # fixed-point iteration on w = exp(-w), the w e^w = 1 equation
    w = 0.5
    for _ in range(200):
        w = math.exp(-w)
    return w


def test_lambert_w_examples():
    assert lambert_w(0.0) == 0.0
    assert lambert_w(math.e) == pytest.approx(1.0, rel=1e-14)
    assert lambert_w(1.0) == pytest.approx(_lambert_fixed_point_oracle(), rel=1e-14)


def test_lambert_w_domain():
    with pytest.raises(DomainError):
        lambert_w(-1.0)
    with pytest.raises(DomainError):
        lambert_w(-0.3678794411714424)  # just below -1/e


def test_lambert_identity_grid():
    for z in np.geomspace(1e-6, 1e12, 60):
        w = lambert_w(float(z))
        assert abs(w * math.exp(w) - z) <= 1e-13 * max(1.0, z)
    for z in np.linspace(-1.0 / math.e + 1e-6, -1e-6, 25):
        w = lambert_w(float(z))
        assert abs(w * math.exp(w) - z) <= 1e-13
        assert w >= -1.0


@given(st.floats(min_value=-1.0 / math.e + 1e-6, max_value=1e12))
@settings(max_examples=200, deadline=None)
def test_lambert_identity_property(z):
    w = lambert_w(z)
    assert w >= -1.0
    assert abs(w * math.exp(w) - z) <= 1e-13 * max(1.0, abs(z))


# ---------------------------------------------------------------------------
# Bernoulli numbers and zeta at negative odd integers
# ---------------------------------------------------------------------------


def _akiyama_tanigawa(n):
    """Independent Bernoulli oracle (first kind; B_1 = -1/2 flipped to +)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    # Akiyama-Tanigawa yields B_1 = +1/2; even indices are convention-free.
    return out


def test_bernoulli_against_independent_oracle():
    table = bernoulli_table(64)
    oracle = _akiyama_tanigawa(64)
    for k in range(33):
        assert table.bernoulli(2 * k) == oracle[2 * k]


def test_bernoulli_recurrence_invariant():
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for 2 <= m <= 64, with B_1 = -1/2.
    table = bernoulli_table(64)

    def bern(j):
        if j == 0:
            return Fraction(1)
        if j == 1:
            return Fraction(-1, 2)
        if j % 2 == 1:
            return Fraction(0)
        return table.bernoulli(j)

    for m in range(2, 65):
        total = sum(math.comb(m + 1, j) * bern(j) for j in range(m + 1))
        assert total == 0


def test_zeta_neg_odd_exact_values():
    assert zeta_neg_odd(0) == Fraction(-1, 12)
    assert zeta_neg_odd(1) == Fraction(1, 120)
    assert zeta_neg_odd(2) == Fraction(-1, 252)


def test_zeta_neg_odd_capacity():
    with pytest.raises(CapacityError) as err:
        zeta_neg_odd(32)  # needs Bernoulli index 66
    assert "66" in str(err.value)


# ---------------------------------------------------------------------------
# Inverse gamma
# ---------------------------------------------------------------------------


def test_inverse_gamma_examples():
    assert inverse_gamma(2.0) == pytest.approx(3.0, rel=1e-12)
    assert inverse_gamma(24.0) == pytest.approx(5.0, rel=1e-12)
    x = math.exp(log_gamma(41.25))
    assert inverse_gamma(x) == pytest.approx(41.25, abs=1e-10)
    with pytest.raises(DomainError):
        inverse_gamma(1.9)


def test_inverse_gamma_roundtrip_grid():
    # geometric grid over [2, 1e300], log-space residual <= 1e-12
    for log_x in np.linspace(math.log(2.0), math.log(1e300), 50):
        g = inverse_gamma_log(float(log_x))
        assert abs(math.lgamma(g) - log_x) <= 1e-12


def test_inverse_gamma_monotone():
    grid = [inverse_gamma_log(float(lx)) for lx in np.linspace(math.log(2.0), 600.0, 80)]
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_inverse_gamma_seed_identity_and_quality():
    s = inverse_gamma_seed(1234.5)
    # u0 log u0 - u0 = log v, to 8 units of rounding on log v
    lhs = s.u0 * math.log(s.u0) - s.u0
    assert abs(lhs - math.log(s.v)) <= 8 * 2.3e-16 * max(1.0, abs(math.log(s.v)))
    assert s.seed > 2.0
    assert inverse_gamma_seed(2.0).seed > 2.0  # left edge of the domain

    errors = []
    for n in (10, 20, 40, 80, 100):
        x_log = log_gamma(float(n))
        seed = inverse_gamma_seed(math.exp(x_log)).seed
        errors.append(abs(inverse_gamma_log(x_log) - seed))
    assert errors == sorted(errors, reverse=True)
    assert errors[1] <= 0.5  # |seed - 20| at x = Gamma(20)
    assert errors[3] <= 1e-2  # error at x = Gamma(80)
    assert errors[4] < errors[1]  # Gamma(100) beats Gamma(20)
    with pytest.raises(DomainError):
        inverse_gamma_seed(1.0)
