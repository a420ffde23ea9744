"""Named verification suites for the asymptotic laws the library implements.

Each suite runs a set of desk-scale numerical checks and returns structured
results; the CLI prints them as PASS/FAIL lines and the acceptance tests
assert on them. Where a law only fixes a rate (leaving constants implicit),
the thresholds below were calibrated once against the brute-force
evaluators and frozen; those spots are marked "calibrated".

Suite names: thm11 (power-log leading order), thm12 (sequence
insensitivity), thm13 (factorial two-term estimate on the good set), thm14
(factorial ceilings and the epsilon envelope), thm15 (saddle-point bound),
lemma22 (log-weighted zeta singularity), lemma31 (factorial Dirichlet
asymptotics at 0), lemma41 (two-term dominance), expansion (classical
divergent expansion), prop62 (power-series limit), cor61 (log-factorial
series law).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .asymptotics import (
    eval_classical_expansion,
    factorial_diagnostics,
    factorial_envelope,
    factorial_upper_bound,
    predict_factorial,
    predict_powerlog,
    slack_exponent,
    two_term_estimate,
)
from .dirichlet import (
    DirichletParams,
    factorial_dirichlet,
    log_weighted_zeta,
    saddle_point_bound,
    transform_frame,
    zeta_singular_prediction,
)
from .errors import ParameterError
from .series import (
    FactorialParams,
    PowerLogParams,
    SequencePair,
    eval_factorial,
    eval_general,
    eval_power_series,
    eval_powerlog,
)
from .special import log_factorial

__all__ = ["CheckResult", "run_suite", "SUITE_NAMES"]

# Strict mode demands this much extra clearance on every threshold.
_STRICT_FACTOR = 0.8


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check.

    ``direction`` records which side of the threshold passes: "le" means
    measured <= threshold, "ge" means measured >= threshold.
    """

    name: str
    passed: bool
    measured: float
    threshold: float
    direction: str = "le"
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        op = "<=" if self.direction == "le" else ">="
        note = f"  [{self.note}]" if self.note else ""
        return (
            f"{status}  {self.name}  measured={self.measured:.6g} "
            f"{op} {self.threshold:.6g}{note}"
        )


def _check(
    name: str,
    measured: float,
    threshold: float,
    direction: str = "le",
    extra_ok: bool = True,
    note: str = "",
    strict: bool = False,
) -> CheckResult:
    bar = threshold
    if strict:
        bar = threshold * _STRICT_FACTOR if direction == "le" else threshold / _STRICT_FACTOR
    ok = measured <= bar if direction == "le" else measured >= bar
    return CheckResult(name, bool(extra_ok and ok), measured, threshold, direction, note)


def _strictly_decreasing(xs) -> bool:
    return all(xs[i + 1] < xs[i] for i in range(len(xs) - 1))


def _strictly_increasing(xs) -> bool:
    return all(xs[i + 1] > xs[i] for i in range(len(xs) - 1))


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_expansion(strict: bool = False) -> list[CheckResult]:
    """Optimal truncation of the classical expansion vs direct evaluation."""
    out = []
    t0 = time.perf_counter()
    val, _ = eval_classical_expansion(2.0, 10.0, mode="optimal")
    direct = (
        2.0 * eval_powerlog(PowerLogParams(1, 2, 0, 0, 2), 10.0, rel_tol=1e-13).value
        + 2.0 / (1.0 + 100.0) ** 3
    )
    elapsed = time.perf_counter() - t0
    rel = abs(val - direct) / direct
    out.append(_check("expansion/rel-error@r=10", rel, 1e-10, strict=strict))
    out.append(_check("expansion/runtime@r=10", elapsed, 1.0, note="seconds", strict=strict))

    val2, _ = eval_classical_expansion(2.0, 100.0, mode="optimal")
    direct2 = (
        2.0 * eval_powerlog(PowerLogParams(1, 2, 0, 0, 2), 100.0, rel_tol=1e-14).value
        + 2.0 / (1.0 + 10000.0) ** 3
    )
    rel2 = abs(val2 - direct2) / direct2
    out.append(
        _check(
            "expansion/rel-error@r=100", rel2, 5e-14, note="double-precision floor", strict=strict
        )
    )
    return out


_THM11_SETS = [
    # (params, final-deviation threshold at r = 1e6)
    (PowerLogParams(1, 2, 0, 0, 1), 0.25),
    (PowerLogParams(1, 2, 1, 1, 1), 0.25),
    (PowerLogParams(2, 3, -1, 2, 1), 0.60),  # calibrated: measured 0.54, slow log decay
    (PowerLogParams(1, 1, 0, 1, 2), 0.25),
]


def suite_thm11(
    strict: bool = False, params: Optional[PowerLogParams] = None
) -> list[CheckResult]:
    """Leading-order ratio trend for the power-logarithmic family."""
    out = []
    t0 = time.perf_counter()
    sets = [(params, 0.60)] if params is not None else _THM11_SETS
    for p, final_tol in sets:
        tag = f"({p.alpha:g},{p.beta:g},{p.gamma:g},{p.delta:g},{p.mu:g})"
        devs = []
        for k in range(2, 7):
            r = 10.0**k
            value = eval_powerlog(p, r, rel_tol=1e-9).value
            devs.append(abs(value / predict_powerlog(p, r) - 1.0))
        out.append(
            _check(
                f"thm11/final-dev{tag}",
                devs[-1],
                final_tol,
                extra_ok=_strictly_decreasing(devs),
                note="|ratio-1|@r=1e6; strictly decreasing over r=1e2..1e6",
                strict=strict,
            )
        )
    elapsed = time.perf_counter() - t0
    out.append(_check("thm11/runtime", elapsed, 60.0, note="seconds", strict=strict))
    return out


def suite_thm12(strict: bool = False) -> list[CheckResult]:
    """Shifted sequences share the power-log first-order law."""
    out = []
    p = PowerLogParams(1, 3, 1, 1, 1)
    shifted = SequencePair(
        a=lambda n: (n + 3.0) * math.log(n + 2.0),
        b=lambda n: float(n) ** 3 * math.log(n + 1.0),
        b_monotone_from=1,
    )
    gaps = []
    for k in range(2, 6):
        r = 10.0**k
        dev_sh = abs(
            eval_general(shifted, 1.0, r, rel_tol=1e-6).value / predict_powerlog(p, r) - 1.0
        )
        dev_un = abs(eval_powerlog(p, r, rel_tol=1e-9).value / predict_powerlog(p, r) - 1.0)
        gaps.append(abs(dev_sh - dev_un))
    out.append(
        _check(
            "thm12/shift-gap-shrinks",
            gaps[-1],
            0.02,
            extra_ok=_strictly_decreasing(gaps),
            note="gap between shifted and plain |ratio-1|, r=1e2..1e5",
            strict=strict,
        )
    )

    plain = PowerLogParams(1, 3, 0, 0, 1)
    seq = SequencePair(a=lambda n: (n + 5.0), b=lambda n: float(n) ** 3, b_monotone_from=0)
    devs = []
    for k in (2, 3, 4):
        r = 10.0**k
        head = 5.0 / (r * r) ** 2 + 6.0 / (1.0 + r * r) ** 2
        v = eval_general(seq, 1.0, r, rel_tol=1e-7).value - head
        devs.append(abs(v / eval_powerlog(plain, r, rel_tol=1e-9).value - 1.0))
    out.append(
        _check(
            "thm12/shift-ratio-to-one",
            devs[-1],
            0.05,
            extra_ok=_strictly_decreasing(devs),
            note="|shifted/plain - 1| at r=1e2,1e3,1e4",
            strict=strict,
        )
    )
    return out


def suite_thm13(strict: bool = False) -> list[CheckResult]:
    """Two-term prediction on the good set: log-ratio within the slack scale."""
    out = []
    p = FactorialParams(1, 2, 1)
    # Radii constructed so that frac_g lands in [0.3, 0.7], r between 9e5 and 2e10.
    for g_target in (10.4, 11.5, 12.35, 12.65, 13.3, 13.55, 14.35):
        r = math.exp(math.lgamma(g_target))
        diag = factorial_diagnostics(p, r)
        value = eval_factorial(p, r, rel_tol=1e-12).value
        pred = predict_factorial(p, r)
        c = abs(math.log(value / pred)) / slack_exponent(r)
        out.append(
            _check(
                f"thm13/slack@r={r:.2e}",
                c,
                5.0,
                note=f"frac_g={diag.frac_g:.3f}",
                strict=strict,
            )
        )
    return out


_FACTORIAL_GRID = [10.0**k for k in range(3, 13)]


def suite_thm14(strict: bool = False) -> list[CheckResult]:
    """Unconditional factorial ceilings: bound, envelope, log-center."""
    out = []
    for p in (FactorialParams(1, 2, 1), FactorialParams(0.5, 1, 1)):
        tag = f"({p.alpha:g},{p.beta:g},{p.mu:g})"
        worst_margin = math.inf
        for r in _FACTORIAL_GRID:
            v = eval_factorial(p, r, rel_tol=1e-12).value
            worst_margin = min(worst_margin, factorial_upper_bound(p, r, 0.2) / v)
        out.append(
            _check(
                f"thm14/ceiling{tag}",
                worst_margin,
                1.0,
                direction="ge",
                note="min bound/value over r=1e3..1e12, eps=0.2",
                strict=strict,
            )
        )

        # calibrated: the eps=0.1 envelope sets in at r=1e4 for (1,2,1)
        # (measured 6% below the lower edge at r=1e3); full grid otherwise.
        grid = _FACTORIAL_GRID[1:] if p.alpha == 1 else _FACTORIAL_GRID
        clearance = math.inf
        for r in grid:
            v = eval_factorial(p, r, rel_tol=1e-12).value
            env = factorial_envelope(p, r, 0.1)
            clearance = min(clearance, v / env.lower, env.upper / v)
        out.append(
            _check(
                f"thm14/envelope{tag}",
                clearance,
                1.0,
                direction="ge",
                note="min clearance of the eps=0.1 envelope",
                strict=strict,
            )
        )

        worst_center = 0.0
        for r in _FACTORIAL_GRID:
            v = eval_factorial(p, r, rel_tol=1e-12).value
            env = factorial_envelope(p, r, 0.1)
            worst_center = max(
                worst_center, abs(math.log(v) - env.log_center) / math.log(math.log(r))
            )
        out.append(
            _check(
                f"thm14/log-center{tag}",
                worst_center,
                10.0,
                note="|log value - center|/log log r",
                strict=strict,
            )
        )
    return out


def suite_thm15(strict: bool = False) -> list[CheckResult]:
    """Saddle-point bound dominance and its growth scale."""
    out = []
    for p in (FactorialParams(1, 2, 1), FactorialParams(0.5, 1, 1), FactorialParams(0, 1, 1)):
        tag = f"({p.alpha:g},{p.beta:g},{p.mu:g})"
        worst = math.inf
        for r in _FACTORIAL_GRID:
            worst = min(
                worst, saddle_point_bound(p, r) / eval_factorial(p, r, rel_tol=1e-12).value
            )
        out.append(
            _check(
                f"thm15/dominates{tag}",
                worst,
                1.0,
                direction="ge",
                note="min bound/value, r=1e3..1e12",
                strict=strict,
            )
        )

    p = FactorialParams(1, 2, 1)
    stilde = transform_frame(factorial=p).stilde
    scaled = []
    for r in _FACTORIAL_GRID:
        b = saddle_point_bound(p, r)
        scaled.append(b * math.exp(stilde * math.log(r)) * math.log(math.log(r)) / math.log(r))
    spread = max(scaled) / min(scaled)
    out.append(
        _check(
            "thm15/scale-constant",
            spread,
            1.2,
            extra_ok=min(scaled) >= 1.0 and max(scaled) <= 2.0,  # calibrated: 1.45..1.53
            note="spread of bound * r^stilde * loglog r / log r (values in [1,2])",
            strict=strict,
        )
    )
    return out


def suite_lemma22(strict: bool = False) -> list[CheckResult]:
    """Singular model of the log-weighted zeta near s = 1."""
    out = []
    for eta, theta in ((0.0, 0.0), (0.0, 1.0), (0.5, 0.0)):
        p = DirichletParams(eta, theta)
        devs = []
        for d in (1e-2, 1e-3, 1e-4):
            ratio = log_weighted_zeta(p, 1.0 + d, rel_tol=1e-8) / zeta_singular_prediction(
                p, 1.0 + d
            )
            devs.append(abs(ratio - 1.0))
        out.append(
            _check(
                f"lemma22/({eta:g},{theta:g})",
                devs[-1],
                0.20,
                extra_ok=_strictly_decreasing(devs),
                note="|ratio-1| monotone over s-1=1e-2,1e-3,1e-4",
                strict=strict,
            )
        )
    return out


def suite_lemma31(strict: bool = False) -> list[CheckResult]:
    """Factorial Dirichlet sum: exact checkpoint and small-s asymptotics."""
    out = []
    dev_e = abs(factorial_dirichlet(1.0, rel_tol=1e-13) - math.e)
    out.append(_check("lemma31/eta(1)=e", dev_e, 1e-12, strict=strict))

    devs = []
    for s in (1e-2, 1e-4, 1e-6, 1e-8):
        v = factorial_dirichlet(s, rel_tol=1e-6)
        devs.append(abs(s * v * math.log(1.0 / s) - 1.0))
    out.append(
        _check(
            "lemma31/origin-asymptotics",
            devs[-1],
            0.30,
            extra_ok=_strictly_decreasing(devs),
            note="|s eta(s) log(1/s) - 1| monotone over s=1e-2..1e-8",
            strict=strict,
        )
    )
    return out


def suite_lemma41(strict: bool = False) -> list[CheckResult]:
    """Two peak terms dominate the factorial series.

    The decade-grid ratio oscillates with the fractional part of the
    inverse-gamma scale, so strict monotonicity is asserted on a
    constructed grid with the fractional part pinned to 1/2; the decade
    grid is checked first-to-last. Thresholds calibrated: the ratio at
    r=1e6 is 0.867 (the off-peak mass is Theta(1/n0) and n0(1e6) = 9).
    """
    out = []
    p = FactorialParams(1, 2, 1)

    decade = []
    for k in range(2, 13, 2):
        r = 10.0**k
        decade.append(two_term_estimate(p, r) / eval_factorial(p, r, rel_tol=1e-13).value)
    out.append(
        _check(
            "lemma41/decade-grid-floor",
            min(decade),
            0.75,
            direction="ge",
            extra_ok=decade[-1] > decade[0],
            note="ratios over r=1e2,1e4..1e12; last > first",
            strict=strict,
        )
    )

    r6 = two_term_estimate(p, 1e6) / eval_factorial(p, 1e6, rel_tol=1e-13).value
    out.append(
        _check(
            "lemma41/ratio@r=1e6", r6, 0.86, direction="ge", note="calibrated", strict=strict
        )
    )

    pinned = []
    for g_half in (6.5, 8.5, 10.5, 12.5, 14.5, 16.5):
        r = math.exp(math.lgamma(g_half))
        pinned.append(two_term_estimate(p, r) / eval_factorial(p, r, rel_tol=1e-13).value)
    out.append(
        _check(
            "lemma41/pinned-frac-monotone",
            pinned[-1],
            0.90,
            direction="ge",
            extra_ok=_strictly_increasing(pinned),
            note="frac_g=1/2 grid: strictly increasing, last >= 0.90",
            strict=strict,
        )
    )
    return out


def suite_cor61(strict: bool = False) -> list[CheckResult]:
    """Log-factorial series against its closed-form first-order law."""
    seq = SequencePair(
        a=lambda n: log_factorial(n),
        b=lambda n: log_factorial(n) ** 3,
        b_monotone_from=2,
    )
    p = PowerLogParams(1, 3, 1, 3, 1)
    devs = []
    for k in range(2, 7):
        r = 10.0**k
        v = eval_general(seq, 1.0, r, rel_tol=1e-5, n_start=2).value
        devs.append(abs(v / predict_powerlog(p, r) - 1.0))
    # calibrated: the deviation rises to 0.40 at r=1e3 before the log-speed
    # decay sets in, then falls to 0.321 at r=1e6.
    return [
        _check(
            "cor61/ratio-trend",
            devs[-1],
            0.35,
            extra_ok=_strictly_decreasing(devs[1:]),
            note="|ratio-1| decreasing over r=1e3..1e6",
            strict=strict,
        )
    ]


def suite_prop62(strict: bool = False) -> list[CheckResult]:
    """Power-series variant collapses to r^(-2(mu+1)) times the plain sum."""
    out = []
    geometric = SequencePair(a=lambda n: 1.0, b=lambda n: float(n) ** 2, b_monotone_from=0)
    vals = [
        10.0 ** (2 * k) * eval_power_series(geometric, 0.0, 0.5, 10.0**k, rel_tol=1e-10)
        for k in (2, 3, 4)
    ]
    out.append(
        _check(
            "prop62/geometric",
            abs(vals[-1] / 2.0 - 1.0),
            0.01,
            extra_ok=_strictly_decreasing([abs(v - 2.0) for v in vals]),
            note="r^2 * value -> 2 over r=1e2,1e3,1e4",
            strict=strict,
        )
    )

    linear = SequencePair(a=lambda n: float(n), b=lambda n: math.factorial(n), b_monotone_from=0)
    vals2 = [
        10.0 ** (4 * k) * eval_power_series(linear, 1.0, 1.0 / 3.0, 10.0**k, rel_tol=1e-10)
        for k in (2, 3, 4)
    ]
    out.append(
        _check(
            "prop62/linear-factorial",
            abs(vals2[-1] / 0.75 - 1.0),
            0.01,
            extra_ok=_strictly_decreasing([abs(v - 0.75) for v in vals2]),
            note="r^4 * value -> 3/4 over r=1e2,1e3,1e4",
            strict=strict,
        )
    )
    return out


_SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "thm11": suite_thm11,
    "thm12": suite_thm12,
    "thm13": suite_thm13,
    "thm14": suite_thm14,
    "thm15": suite_thm15,
    "lemma22": suite_lemma22,
    "lemma31": suite_lemma31,
    "lemma41": suite_lemma41,
    "expansion": suite_expansion,
    "prop62": suite_prop62,
    "cor61": suite_cor61,
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(
    name: str, strict: bool = False, params: Optional[PowerLogParams] = None
) -> list[CheckResult]:
    """Run a named suite; ``params`` overrides the parameter set for thm11."""
    if name not in _SUITES:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if params is not None:
        if name != "thm11":
            raise ParameterError("parameter overrides are only supported for suite thm11")
        return suite_thm11(strict=strict, params=params)
    return _SUITES[name](strict=strict)
