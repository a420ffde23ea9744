"""Command-line interface: evaluation, prediction, sweeps, verification.

Output is machine-readable (JSON by default, CSV with --format csv), with
17-significant-digit round-trip numbers and no timestamps, so identical
flags produce byte-identical output. Exit codes: 0 success, 1 verification
or numeric failure, 2 parameter error, 3 resource cap, 4 unmet
precondition (e.g. radius outside the good set).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Optional

from . import __version__
from .asymptotics import (
    asymptotic_prediction,
    eval_classical_expansion,
    factorial_diagnostics,
    predict_factorial,
    predict_powerlog,
)
from .errors import (
    CapacityError,
    DomainError,
    MathieuError,
    NumericError,
    ParameterError,
    PreconditionError,
    ResourceLimitError,
)
from .series import (
    DEFAULT_GENERAL_CAP,
    DEFAULT_HARD_CAP,
    FactorialParams,
    PowerLogParams,
    SequencePair,
    eval_factorial,
    eval_general,
    eval_power_series,
    eval_powerlog,
)
from .special import log_factorial
from .verify import SUITE_NAMES, run_suite

__all__ = ["main", "entrypoint"]

_ENV_TERM_CAP = "MATHIEU_TERM_CAP"


def _fmt(x) -> str:
    """Shortest round-trip decimal for floats; plain str otherwise."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _term_cap(default: int) -> int:
    raw = os.environ.get(_ENV_TERM_CAP)
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ParameterError(f"{_ENV_TERM_CAP} must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise ParameterError(f"{_ENV_TERM_CAP} must be positive, got {cap}")
    return cap


def _write_output(text: str, out_path: Optional[str]) -> None:
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta_line(args: argparse.Namespace, keys: list[str]) -> str:
    parts = [f"mathieu-series v{__version__}"]
    for key in keys:
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None:
            parts.append(f"{key}={_fmt(value) if not isinstance(value, str) else value}")
    return "# " + " ".join(parts)


def _emit_record(record: dict, args: argparse.Namespace, meta_keys: list[str]) -> None:
    if args.format == "json":
        _write_output(json.dumps(record) + "\n", args.out)
    else:
        buf = io.StringIO()
        buf.write(_meta_line(args, meta_keys) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow([_fmt(v) for v in record.values()])
        _write_output(buf.getvalue(), args.out)


# ---------------------------------------------------------------------------
# Sequence presets for the general and power-series families
# ---------------------------------------------------------------------------


def _general_preset(args: argparse.Namespace) -> tuple[SequencePair, int]:
    name = args.sequences
    if name == "logfact":
        # Validates convergence through the equivalent power-log tuple.
        PowerLogParams(args.alpha, args.beta, args.alpha, args.beta, args.mu)
        pair = SequencePair(
            a=lambda n: log_factorial(n) ** args.alpha,
            b=lambda n: log_factorial(n) ** args.beta,
            b_monotone_from=2,
        )
        return pair, 2
    if name == "shifted-powerlog":
        PowerLogParams(args.alpha, args.beta, args.gamma, args.delta, args.mu)
        pair = SequencePair(
            a=lambda n: (n + 3.0) ** args.alpha * math.log(n + 2.0) ** args.gamma,
            b=lambda n: float(n) ** args.beta * math.log(n + 1.0) ** args.delta,
            b_monotone_from=1,
        )
        return pair, 0
    raise ParameterError(f"unknown general-series preset {name!r}")


_POWER_SERIES_PRESETS = {
    "ones-squares": lambda: SequencePair(
        a=lambda n: 1.0, b=lambda n: float(n) ** 2, b_monotone_from=0
    ),
    "linear-factorial": lambda: SequencePair(
        a=lambda n: float(n), b=lambda n: math.factorial(n), b_monotone_from=0
    ),
}


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    if args.family == "powerlog":
        p = PowerLogParams(args.alpha, args.beta, args.gamma, args.delta, args.mu)
        res = eval_powerlog(p, args.r, rel_tol=args.tol, hard_cap=_term_cap(DEFAULT_HARD_CAP))
    elif args.family == "factorial":
        p = FactorialParams(args.alpha, args.beta, args.mu)
        res = eval_factorial(p, args.r, rel_tol=args.tol, hard_cap=_term_cap(DEFAULT_HARD_CAP))
    elif args.family == "general":
        pair, n_start = _general_preset(args)
        res = eval_general(
            pair,
            args.mu,
            args.r,
            rel_tol=args.tol,
            hard_cap=_term_cap(args.hard_cap),
            n_start=n_start,
        )
    else:  # powerseries
        pair = _POWER_SERIES_PRESETS[args.sequences]()
        value = eval_power_series(
            pair, args.mu, args.x, args.r, rel_tol=args.tol, hard_cap=_term_cap(DEFAULT_GENERAL_CAP)
        )
        record = {"family": args.family, "r": args.r, "x": args.x, "value": value}
        _emit_record(record, args, ["family", "sequences", "mu", "x", "r", "tol"])
        return 0

    record = {
        "family": args.family,
        "r": args.r,
        "value": res.value,
        "tail_bound": res.tail_bound,
        "terms_used": res.terms_used,
        "peak_index": res.peak_index,
    }
    meta = ["family", "sequences", "alpha", "beta", "gamma", "delta", "mu", "r", "tol"]
    _emit_record(record, args, meta)
    return 0


def _cmd_predict(args: argparse.Namespace) -> int:
    if args.family == "powerlog":
        gamma = args.alpha if args.gamma_eq_alpha else args.gamma
        delta = args.beta if args.delta_eq_beta else args.delta
        p = PowerLogParams(args.alpha, args.beta, gamma, delta, args.mu)
        pred = asymptotic_prediction(p)
        log_exponent = pred.log_exponent
        if args.gamma_eq_alpha and args.delta_eq_beta:
            log_exponent = -1.0  # exact in the closed form, immune to rounding
        value = pred.constant * math.exp(
            pred.r_exponent * math.log(args.r) + log_exponent * math.log(math.log(args.r))
        )
        record = {
            "family": "powerlog",
            "r": args.r,
            "constant": pred.constant,
            "r_exponent": pred.r_exponent,
            "log_exponent": log_exponent,
            "value": value,
        }
        _emit_record(record, args, ["family", "alpha", "beta", "gamma", "delta", "mu", "r"])
        return 0

    p = FactorialParams(args.alpha, args.beta, args.mu)
    diag = factorial_diagnostics(p, args.r, args.d1, args.d2)
    diag_fields = {
        "g": diag.g,
        "frac_g": diag.frac_g,
        "n0": diag.n0,
        "m_r": diag.m_r,
        "in_R": diag.in_R,
    }
    if not diag.in_R:
        record = {"family": "factorial", "r": args.r, "error": "outside the good set", **diag_fields}
        _emit_record(record, args, ["family", "alpha", "beta", "mu", "r", "d1", "d2"])
        print(
            f"precondition failed: frac_g={diag.frac_g:.6f} outside [{args.d1}, {args.d2}]",
            file=sys.stderr,
        )
        return 4
    value = predict_factorial(p, args.r, args.d1, args.d2)
    record = {"family": "factorial", "r": args.r, "value": value, **diag_fields}
    _emit_record(record, args, ["family", "alpha", "beta", "mu", "r", "d1", "d2"])
    return 0


def _parse_grid(spec: str) -> list[float]:
    try:
        lo_s, hi_s, n_s = spec.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError as exc:
        raise ParameterError(f"grid spec must be r_min:r_max:points, got {spec!r}") from exc
    if not (0 < lo < hi) or n < 1:
        raise ParameterError(f"grid spec must satisfy 0 < r_min < r_max, points >= 1: {spec!r}")
    if n == 1:
        return [lo]
    ratio = (hi / lo) ** (1.0 / (n - 1))
    return [lo * ratio**i for i in range(n)]


def _sweep_row(args: argparse.Namespace, r: float) -> dict:
    if args.family == "powerlog":
        p = PowerLogParams(args.alpha, args.beta, args.gamma, args.delta, args.mu)
        res = eval_powerlog(p, r, rel_tol=args.tol, hard_cap=_term_cap(DEFAULT_HARD_CAP))
        pred = predict_powerlog(p, r)
        return {
            "r": r,
            "value": res.value,
            "prediction": pred,
            "ratio": res.value / pred if pred > 0 else None,
            "tail_bound": res.tail_bound,
        }
    if args.family == "factorial":
        p = FactorialParams(args.alpha, args.beta, args.mu)
        res = eval_factorial(p, r, rel_tol=args.tol, hard_cap=_term_cap(DEFAULT_HARD_CAP))
        diag = factorial_diagnostics(p, r, args.d1, args.d2)
        pred = predict_factorial(p, r, args.d1, args.d2) if diag.in_R else None
        return {
            "r": r,
            "value": res.value,
            "prediction": pred,
            "ratio": res.value / pred if pred else None,
            "tail_bound": res.tail_bound,
            "g": diag.g,
            "frac_g": diag.frac_g,
            "n0": diag.n0,
            "m_r": diag.m_r,
            "in_R": diag.in_R,
        }
    # expansion: optimal truncation against the direct evaluation
    value, err = eval_classical_expansion(args.mu, r, mode="optimal")
    p = PowerLogParams(1, 2, 0, 0, args.mu)
    direct = 2.0 * eval_powerlog(p, r, rel_tol=1e-13).value + 2.0 / (1.0 + r * r) ** (args.mu + 1)
    return {
        "r": r,
        "value": value,
        "prediction": direct,
        "ratio": value / direct,
        "tail_bound": err,
    }


def _cmd_sweep(args: argparse.Namespace) -> int:
    grid = _parse_grid(args.r_grid)
    # Validate parameters once up front so bad tuples exit 2 before work.
    if args.family == "powerlog":
        PowerLogParams(args.alpha, args.beta, args.gamma, args.delta, args.mu)
    elif args.family == "factorial":
        FactorialParams(args.alpha, args.beta, args.mu)

    rows = []
    failures = 0
    for r in sorted(grid):
        try:
            rows.append(_sweep_row(args, r))
        except MathieuError as exc:
            failures += 1
            rows.append({"r": r, "error": str(exc)})
    if failures == len(rows):
        print("sweep failed at every grid point", file=sys.stderr)
        return 1

    base_cols = ["r", "value", "prediction", "ratio", "tail_bound"]
    if args.family == "factorial":
        base_cols += ["g", "frac_g", "n0", "m_r", "in_R"]
    if failures:
        base_cols += ["error"]

    meta_keys = ["family", "alpha", "beta", "gamma", "delta", "mu", "d1", "d2", "r-grid", "tol"]
    if args.format == "json":
        payload = {
            "meta": {"version": __version__, "family": args.family, "r_grid": args.r_grid},
            "records": [{k: row.get(k) for k in base_cols} for row in rows],
        }
        _write_output(json.dumps(payload, indent=None) + "\n", args.out)
    else:
        buf = io.StringIO()
        buf.write(_meta_line(args, meta_keys) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(base_cols)
        for row in rows:
            writer.writerow([_fmt(row.get(col)) for col in base_cols])
        _write_output(buf.getvalue(), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    params = None
    override = [args.alpha, args.beta, args.gamma, args.delta, args.mu]
    if any(v is not None for v in override):
        if any(v is None for v in override[:2]) or override[4] is None:
            raise ParameterError(
                "suite parameter override needs --alpha, --beta and --mu (plus "
                "--gamma/--delta, default 0)"
            )
        params = PowerLogParams(
            args.alpha, args.beta, args.gamma or 0.0, args.delta or 0.0, args.mu
        )
    results = run_suite(args.suite, strict=args.strict, params=params)
    lines = [c.line() for c in results]
    _write_output("\n".join(lines) + "\n", args.out)
    return 0 if all(c.passed for c in results) else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common_output(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="output path ('-' or omitted for stdout)")


def _add_family_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=float, default=None)
    sub.add_argument("--beta", type=float, default=None)
    sub.add_argument("--gamma", type=float, default=0.0)
    sub.add_argument("--delta", type=float, default=0.0)
    sub.add_argument("--mu", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mathieu",
        description="Evaluate Mathieu-type series, their asymptotic laws, and verification sweeps.",
    )
    ap.add_argument("--version", action="version", version=f"mathieu-series {__version__}")
    subs = ap.add_subparsers(dest="command", required=True)

    ev = subs.add_parser("eval", help="evaluate a series with certified truncation")
    ev.add_argument("family", choices=("powerlog", "factorial", "general", "powerseries"))
    _add_family_params(ev)
    ev.add_argument("--r", type=float, required=True)
    ev.add_argument("--x", type=float, default=0.5, help="geometric factor (powerseries)")
    ev.add_argument("--tol", type=float, default=1e-8)
    ev.add_argument(
        "--sequences",
        default="logfact",
        help="preset for general/powerseries: logfact, shifted-powerlog, "
        "ones-squares, linear-factorial",
    )
    ev.add_argument("--hard-cap", type=int, default=DEFAULT_GENERAL_CAP)
    _add_common_output(ev)
    ev.set_defaults(func=_cmd_eval)

    pr = subs.add_parser("predict", help="closed-form asymptotic prediction")
    pr.add_argument("family", choices=("powerlog", "factorial"))
    _add_family_params(pr)
    pr.add_argument("--r", type=float, required=True)
    pr.add_argument("--gamma-eq-alpha", action="store_true", help="set gamma = alpha exactly")
    pr.add_argument("--delta-eq-beta", action="store_true", help="set delta = beta exactly")
    pr.add_argument("--d1", type=float, default=0.2)
    pr.add_argument("--d2", type=float, default=0.8)
    _add_common_output(pr)
    pr.set_defaults(func=_cmd_predict)

    sw = subs.add_parser("sweep", help="evaluate and predict over a geometric radius grid")
    sw.add_argument("family", choices=("powerlog", "factorial", "expansion"))
    _add_family_params(sw)
    sw.add_argument("--r-grid", required=True, help="r_min:r_max:points (geometric)")
    sw.add_argument("--tol", type=float, default=1e-8)
    sw.add_argument("--d1", type=float, default=0.2)
    sw.add_argument("--d2", type=float, default=0.8)
    _add_common_output(sw)
    sw.set_defaults(func=_cmd_sweep)

    vf = subs.add_parser("verify", help="run a named verification suite")
    vf.add_argument("suite", choices=SUITE_NAMES)
    vf.add_argument("--strict", action="store_true", help="demand 20%% threshold clearance")
    for flag in ("--alpha", "--beta", "--gamma", "--delta", "--mu"):
        vf.add_argument(flag, type=float, default=None)
    _add_common_output(vf)
    vf.set_defaults(func=_cmd_verify)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)

    # Required numeric flags per family, enforced here so argparse stays simple.
    required = {
        ("eval", "powerlog"): ("alpha", "beta", "mu"),
        ("eval", "factorial"): ("alpha", "beta", "mu"),
        ("eval", "general"): ("alpha", "beta", "mu"),
        ("eval", "powerseries"): ("mu",),
        ("predict", "powerlog"): ("alpha", "beta", "mu"),
        ("predict", "factorial"): ("alpha", "beta", "mu"),
        ("sweep", "powerlog"): ("alpha", "beta", "mu"),
        ("sweep", "factorial"): ("alpha", "beta", "mu"),
        ("sweep", "expansion"): ("mu",),
    }
    try:
        key = (args.command, getattr(args, "family", None))
        for field in required.get(key, ()):
            if getattr(args, field) is None:
                raise ParameterError(f"--{field} is required for {key[0]} {key[1]}")
        return args.func(args)
    except (ParameterError, DomainError, CapacityError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 4
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
