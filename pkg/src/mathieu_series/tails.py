"""Integral-comparison tail bounds for power-logarithmic summands.

The bounds reduce integrals of x^A (log x)^B to upper incomplete gamma
values through the substitution x = exp(u), which keeps them certified and
cheap for any real log-power B.
"""

from __future__ import annotations

import math

import mpmath

from .errors import DomainError, NumericError


def exp_poly_tail(decay: float, power: float, u0: float) -> float:
    """Integral of u^power * exp(-decay*u) over [u0, infinity).

    Requires decay > 0 and u0 > 0. Equals decay^(-power-1) times the upper
    incomplete gamma function at (power+1, decay*u0); mpmath handles the
    nonpositive-parameter cases scipy does not expose.
    """
    if decay <= 0.0:
        raise DomainError(f"exp_poly_tail requires positive decay, got {decay}")
    if u0 <= 0.0:
        raise DomainError(f"exp_poly_tail requires u0 > 0, got {u0}")
    with mpmath.workdps(30):
        try:
            upper = mpmath.gammainc(power + 1.0, a=decay * u0, b=mpmath.inf)
            value = mpmath.exp(-(power + 1.0) * mpmath.log(decay)) * upper
        except (ValueError, mpmath.libmp.NoConvergence) as exc:  # pragma: no cover
            raise NumericError(f"incomplete-gamma tail evaluation failed: {exc}") from exc
        out = float(value)
    if not math.isfinite(out) or out < 0.0:
        raise NumericError(f"incomplete-gamma tail returned {out}")
    return out


def powerlog_tail_integral(power: float, log_power: float, from_x: float) -> float:
    """Integral of x^power * (log x)^log_power over [from_x, infinity).

    Requires power < -1 and from_x > 1 so the integral converges.
    """
    if power >= -1.0:
        raise DomainError(f"powerlog tail integral needs power < -1, got {power}")
    if from_x <= 1.0:
        raise DomainError(f"powerlog tail integral needs from_x > 1, got {from_x}")
    # x = exp(u):  integral of exp((power+1) u) u^log_power du over [log from_x, inf)
    return exp_poly_tail(-(power + 1.0), log_power, math.log(from_x))


def powerlog_majorant_is_decreasing(power: float, log_power: float, from_x: float) -> bool:
    """True when x^power (log x)^log_power is decreasing on [from_x, inf)."""
    return power + log_power / math.log(from_x) < 0.0
