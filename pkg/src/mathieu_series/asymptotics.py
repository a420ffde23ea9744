"""Closed-form asymptotic predictions and diagnostics.

Leading-order laws for the power-logarithmic family (both the generic and
the integer-exponent branch of the constant), fractional-part diagnostics
and predictions for the factorial family, the epsilon-envelope and
log-power ceiling bounds, and the full divergent expansion of the classical
Mathieu series with optimal truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dirichlet import is_positive_integer
from .errors import CapacityError, DomainError, ParameterError, PreconditionError
from .series import FactorialParams, PowerLogParams, factorial_summand_log, peak_index_n0
from .special import bernoulli_table, inverse_gamma_log, log_factorial, zeta_neg_odd

__all__ = [
    "AsymptoticPrediction",
    "FactorialDiagnostics",
    "FactorialEnvelope",
    "ExpansionTerm",
    "leading_constant",
    "asymptotic_prediction",
    "predict_powerlog",
    "factorial_diagnostics",
    "predict_factorial",
    "slack_exponent",
    "two_term_estimate",
    "factorial_envelope",
    "factorial_upper_bound",
    "classical_expansion_terms",
    "eval_classical_expansion",
]


@dataclass(frozen=True)
class AsymptoticPrediction:
    """Constant, radius power and log power of a leading-order law."""

    constant: float
    r_exponent: float
    log_exponent: float


@dataclass(frozen=True)
class FactorialDiagnostics:
    """Fractional-part diagnostics of the factorial family at radius r."""

    g: float
    frac_g: float
    n0: int
    m_r: float
    in_R: bool
    in_R0: bool


@dataclass(frozen=True)
class FactorialEnvelope:
    """Two-sided power envelope with the matching log-space center line."""

    lower: float
    upper: float
    log_center: float


@dataclass(frozen=True)
class ExpansionTerm:
    """One term of the classical expansion; k = -1 denotes the leading term."""

    k: int
    coefficient: float
    r_power: float


# ---------------------------------------------------------------------------
# Power-logarithmic family
# ---------------------------------------------------------------------------


def _gamma_checked(x: float, label: str) -> float:
    if x <= 0.0 and abs(x - round(x)) < 1e-9:
        raise DomainError(f"gamma pole in {label}: argument {x} is a nonpositive integer")
    try:
        return math.gamma(x)
    except ValueError as exc:
        raise DomainError(f"gamma pole in {label}: argument {x}") from exc


def leading_constant(
    p: PowerLogParams, force_integer_branch: Optional[bool] = None
) -> float:
    """Constant of the leading-order law for the power-log family.

    Branch selection follows the shared positive-integer detection rule on
    m = delta*(alpha+1)/beta - gamma; m = 0 goes to the generic branch.
    """
    m = p.delta * (p.alpha + 1.0) / p.beta - p.gamma
    common = _gamma_checked(
        -(p.alpha + 1.0) / p.beta + p.mu + 1.0, "Gamma(mu+1-(alpha+1)/beta)"
    ) * _gamma_checked((p.alpha + 1.0) / p.beta, "Gamma((alpha+1)/beta)")
    gamma_mu1 = math.gamma(p.mu + 1.0)
    if is_positive_integer(m, force_integer_branch):
        mi = round(m)
        return p.beta ** (mi - 1) * common / (2.0**mi * gamma_mu1)
    return (
        (0.5 * p.beta) ** (m - 1.0)
        * _gamma_checked(m + 1.0, "Gamma(m+1)")
        / (2.0 * gamma_mu1 * _gamma_checked(-m + 1.0, "Gamma(1-m)"))
        * common
    )


def asymptotic_prediction(
    p: PowerLogParams, force_integer_branch: Optional[bool] = None
) -> AsymptoticPrediction:
    """Leading-order law: constant, power of r, and power of log r."""
    return AsymptoticPrediction(
        constant=leading_constant(p, force_integer_branch),
        r_exponent=2.0 * (p.alpha + 1.0) / p.beta - 2.0 * (p.mu + 1.0),
        log_exponent=-p.delta * (p.alpha + 1.0) / p.beta + p.gamma,
    )


def predict_powerlog(p: PowerLogParams, r: float) -> float:
    """Leading-order value C * r^(2(alpha+1)/beta - 2(mu+1)) * (log r)^(gamma - delta(alpha+1)/beta)."""
    r = float(r)
    if not (math.isfinite(r) and r > math.e):
        raise DomainError(f"predict_powerlog requires r > e, got {r}")
    pred = asymptotic_prediction(p)
    log_r = math.log(r)
    return pred.constant * math.exp(
        pred.r_exponent * log_r + pred.log_exponent * math.log(log_r)
    )


# ---------------------------------------------------------------------------
# Factorial family
# ---------------------------------------------------------------------------


def factorial_diagnostics(
    p: FactorialParams, r: float, d1: float = 0.2, d2: float = 0.8
) -> FactorialDiagnostics:
    """Fractional part of the inverse-gamma scale and derived quantities.

    Requires alpha > 0 (the sharp two-term asymptotics do not cover
    alpha = 0) and r >= 10. g comes from the inverse gamma function of
    r^(2/beta) evaluated in log space; values within 1e-9 of an integer
    snap to it so that exact boundary cases report a zero fractional part.
    """
    if not (0.0 < d1 < d2 < 1.0):
        raise ParameterError(f"need 0 < d1 < d2 < 1, got d1={d1}, d2={d2}")
    if p.alpha <= 0.0:
        raise ParameterError(
            "factorial diagnostics require alpha > 0; the two-term asymptotics "
            "do not cover alpha = 0"
        )
    r = float(r)
    if not (math.isfinite(r) and r >= 10.0):
        raise DomainError(f"factorial_diagnostics requires r >= 10, got {r}")

    g = inverse_gamma_log((2.0 / p.beta) * math.log(r))
    if abs(g - round(g)) < 1e-9:
        g = float(round(g))
    frac = g - math.floor(g)
    span = p.beta * (p.mu + 1.0) - p.alpha
    m_r = min(p.alpha * frac, span * (1.0 - frac))
    return FactorialDiagnostics(
        g=g,
        frac_g=frac,
        n0=peak_index_n0(p.beta, r),
        m_r=m_r,
        in_R=bool(d1 <= frac <= d2),
        in_R0=bool(-p.alpha * frac >= (p.alpha - p.beta * (p.mu + 1.0)) * (1.0 - frac)),
    )


def predict_factorial(
    p: FactorialParams, r: float, d1: float = 0.2, d2: float = 0.8
) -> float:
    """Central two-term estimate r^(-2(mu+1-alpha/beta)) exp(-m(r) log log r).

    Only valid on the good set (d1 <= frac_g <= d2); outside it raises
    ``PreconditionError`` carrying the diagnostics. The neglected error
    factor has exponent of order slack_exponent(r), reported separately.
    """
    diag = factorial_diagnostics(p, r, d1, d2)
    if not diag.in_R:
        raise PreconditionError(
            f"radius r={r} lies outside the good set: frac_g={diag.frac_g:.6f} "
            f"not in [{d1}, {d2}]",
            diagnostics=diag,
        )
    log_r = math.log(r)
    return math.exp(
        -2.0 * (p.mu + 1.0 - p.alpha / p.beta) * log_r - diag.m_r * math.log(log_r)
    )


def slack_exponent(r: float) -> float:
    """log log log r: the scale of the error exponent in predict_factorial."""
    r = float(r)
    if r <= math.exp(math.e):
        raise DomainError(f"slack_exponent requires r > e^e, got {r}")
    return math.log(math.log(math.log(r)))


def two_term_estimate(p: FactorialParams, r: float) -> float:
    """Sum of the two peak summands A_n0 + A_n0+1 in log space."""
    r = float(r)
    if not (math.isfinite(r) and r >= 1.0):
        raise DomainError(f"two_term_estimate requires r >= 1, got {r}")
    n0 = peak_index_n0(p.beta, r)
    la = factorial_summand_log(p, r, n0)
    lb = factorial_summand_log(p, r, n0 + 1)
    hi, lo = (la, lb) if la >= lb else (lb, la)
    return math.exp(hi) * (1.0 + math.exp(lo - hi))


def factorial_envelope(p: FactorialParams, r: float, epsilon: float) -> FactorialEnvelope:
    """Two-sided envelope r^(2 alpha/beta - 2(mu+1) -+ epsilon).

    ``log_center`` is the matching central log-space line
    -2(mu+1-alpha/beta) log r.
    """
    if p.alpha <= 0.0:
        raise ParameterError("factorial_envelope requires alpha > 0")
    r = float(r)
    if not (math.isfinite(r) and r >= 100.0):
        raise DomainError(f"factorial_envelope requires r >= 100, got {r}")
    if not epsilon > 0.0:
        raise ParameterError(f"epsilon must be > 0, got {epsilon}")
    exponent = 2.0 * p.alpha / p.beta - 2.0 * (p.mu + 1.0)
    log_r = math.log(r)
    return FactorialEnvelope(
        lower=math.exp((exponent - epsilon) * log_r),
        upper=math.exp((exponent + epsilon) * log_r),
        log_center=exponent * log_r,
    )


def factorial_upper_bound(
    p: FactorialParams, r: float, epsilon: float, slack: float = 5.0
) -> float:
    """Ceiling r^(-2(mu+1-alpha/beta)) exp(eps log log r + slack log log log r).

    The slack constant stands in for the unspecified error-term constant
    and is calibrated empirically (default 5).
    """
    if p.alpha <= 0.0:
        raise ParameterError("factorial_upper_bound requires alpha > 0")
    r = float(r)
    if not (math.isfinite(r) and r >= 100.0):
        raise DomainError(f"factorial_upper_bound requires r >= 100, got {r}")
    if not epsilon > 0.0:
        raise ParameterError(f"epsilon must be > 0, got {epsilon}")
    log_r = math.log(r)
    return math.exp(
        -2.0 * (p.mu + 1.0 - p.alpha / p.beta) * log_r
        + epsilon * math.log(log_r)
        + slack * math.log(math.log(log_r))
    )


# ---------------------------------------------------------------------------
# Classical expansion
# ---------------------------------------------------------------------------


def classical_expansion_terms(mu: float, K: int, max_bernoulli: int = 64) -> list[ExpansionTerm]:
    """Terms of the divergent large-r expansion of the classical series.

    Term k = -1 is the leading 1/mu * r^(-2 mu); terms k = 0..K carry
    coefficients 2 (-1)^k zeta(-2k-1) Gamma(k+mu+1) / (Gamma(mu+1) k!).
    Coefficients are exact rationals whenever mu is integral. The
    coefficient formulas are well-defined for any mu > 0; the series they
    expand requires mu > 3/2, which eval_classical_expansion enforces.
    """
    if not (math.isfinite(mu) and mu > 0.0):
        raise DomainError(f"classical expansion terms require mu > 0, got {mu}")
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    table = bernoulli_table(max_bernoulli)
    if 2 * K + 2 > table.max_index:
        raise CapacityError(
            f"expansion order K={K} needs Bernoulli index {2 * K + 2}, "
            f"capacity is {table.max_index}"
        )
    terms = [ExpansionTerm(k=-1, coefficient=1.0 / mu, r_power=-2.0 * mu)]
    mu_is_int = mu == int(mu)
    for k in range(K + 1):
        zeta_val = zeta_neg_odd(k, table)
        if mu_is_int:
            coeff = float(2 * Fraction(-1) ** k * zeta_val * math.comb(k + int(mu), k))
        else:
            ratio = math.exp(
                math.lgamma(k + mu + 1.0) - math.lgamma(mu + 1.0) - log_factorial(k)
            )
            coeff = 2.0 * (-1.0) ** k * float(zeta_val) * ratio
        terms.append(ExpansionTerm(k=k, coefficient=coeff, r_power=-2.0 * k - 2.0 * mu - 2.0))
    return terms


def eval_classical_expansion(
    mu: float,
    r: float,
    mode: str = "optimal",
    K: Optional[int] = None,
    max_bernoulli: int = 64,
) -> tuple[float, float]:
    """Partial sum of the classical expansion with its error estimate.

    In "optimal" mode the sum stops before the smallest-magnitude
    correction term and reports that term's magnitude as the error
    estimate. In "fixed" mode, K counts the correction terms beyond the
    leading one, and the estimate is the next term's magnitude.
    """
    if not (math.isfinite(mu) and mu > 1.5):
        raise DomainError(f"the classical series requires mu > 3/2, got {mu}")
    r = float(r)
    if not (math.isfinite(r) and r > 1.0):
        raise DomainError(f"eval_classical_expansion requires r > 1, got {r}")
    if mode not in ("optimal", "fixed"):
        raise ParameterError(f"mode must be 'optimal' or 'fixed', got {mode!r}")
    k_top = (max_bernoulli - 2) // 2
    if mode == "fixed":
        if K is None:
            raise ParameterError("fixed mode requires K")
        if K > k_top:
            raise CapacityError(f"K={K} correction terms exceed capacity {k_top}")

    terms = classical_expansion_terms(mu, k_top, max_bernoulli)
    log_r = math.log(r)
    values = [t.coefficient * math.exp(t.r_power * log_r) for t in terms]
    leading, corrections = values[0], values[1:]

    if mode == "fixed":
        value = leading + math.fsum(corrections[:K])
        estimate = abs(corrections[K]) if K < len(corrections) else abs(corrections[-1])
        return value, estimate

    stop = len(corrections) - 1
    for j in range(len(corrections) - 1):
        if abs(corrections[j + 1]) >= abs(corrections[j]):
            stop = j
            break
    return leading + math.fsum(corrections[:stop]), abs(corrections[stop])
