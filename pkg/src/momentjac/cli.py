"""Command-line front end: moments, jacobian, classify and verify.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import InputError, NumericalFailure, RouteMismatch
from .jacobian import ROUTES, cross_check
from .moments import cauchy_series, moment_map, moments_residue, moments_richardson
from .polycore import RatPoly, check_moment_polynomial
from .univalence import INTERIOR, classify, sample_interior

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


def fmt_value(v):
    """JSON-safe rendering: rationals as "p/q" strings, complex as re/im."""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, dict):
        return {str(k): fmt_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [fmt_value(x) for x in v]
    return v


def parse_coeffs(text: str) -> RatPoly:
    try:
        P = RatPoly.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse coefficients {text!r}: {exc}") from None
    check_moment_polynomial(P)
    return P


def parse_routes(text: str) -> tuple[str, ...]:
    if text.strip() == "all":
        return ROUTES
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    unknown = [r for r in names if r not in ROUTES]
    if unknown:
        raise InputError(f"unknown routes {unknown}; choose from {', '.join(ROUTES)} or all")
    if "direct" not in names:
        names = ("direct",) + names
    return names


def cmd_moments(args) -> dict:
    P = parse_coeffs(args.coeffs)
    mu = moment_map(P)
    out = {"moments": list(mu.values)}
    if args.terms:
        series = cauchy_series(P, args.terms)
        out["cauchy_series"] = {f"z^{m}": c for m, c in sorted(series.terms.items(), reverse=True)}
    return {"outputs": out, "agree": {"richardson=residue": True}}


def cmd_jacobian(args) -> dict:
    P = parse_coeffs(args.coeffs)
    report = cross_check(P, parse_routes(args.routes), tol=args.tol)
    outputs = dict(report.values)
    if report.errors:
        outputs["errors"] = dict(report.errors)
    return {"outputs": outputs, "agree": dict(report.agree)}


def cmd_classify(args) -> dict:
    P = parse_coeffs(args.coeffs)
    cl = classify(P)
    outputs = {
        "verdict": cl.verdict,
        "label": cl.label(),
        "surfaces": sorted(cl.surfaces),
        "witness": dict(cl.witness),
        "margin": cl.margin,
    }
    boundary_ok = cl.verdict != "Boundary" or cl.witness["Res(P',P'*)"] == 0
    return {"outputs": outputs, "agree": {"boundary-resultant": boundary_ok}}


def verify_one(P: RatPoly, tol: float) -> dict[str, bool]:
    """Run the invariant suite on one sampled polynomial."""
    n = int(P.degree)
    checks: dict[str, bool] = {}
    rich = moments_richardson(P, 2 * n + 1)
    res = moments_residue(P, 2 * n + 1)
    checks["moments-agree"] = rich.values == res.values
    checks["moments-vanish"] = all(v == 0 for v in res.values[n:])
    report = cross_check(P, ROUTES, tol=tol)
    checks.update({f"route-{k}": v for k, v in report.agree.items() if k != "direct"})
    checks["nonzero-jacobian"] = report.values["direct"] != 0
    checks["interior"] = classify(P).verdict == INTERIOR
    return checks


def cmd_verify(args) -> dict:
    if not 1 <= args.n <= 10:
        raise InputError("--n must lie in 1..10")
    if args.trials < 1:
        raise InputError("--trials must be positive")
    samples = sample_interior(args.n, args.seed, trials=200 * args.trials + 1000, count=args.trials)
    if len(samples) < args.trials:
        raise InputError(f"sampler exhausted: {len(samples)} of {args.trials} samples found")
    passes = 0
    failures = []
    tallies: dict[str, int] = {}
    for P in samples:
        checks = verify_one(P, args.tol)
        for name, ok in checks.items():
            tallies[name] = tallies.get(name, 0) + int(ok)
        if all(checks.values()):
            passes += 1
        else:
            failures.append(",".join(str(c) for c in P.coeffs))
    outputs = {"samples": len(samples), "passes": passes, "failures": failures, "checks": tallies}
    return {"outputs": outputs, "agree": {"all-invariants": passes == len(samples)}}


COMMANDS = {
    "moments": cmd_moments,
    "jacobian": cmd_jacobian,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentjac",
        description="Complex moment map of real polynomials and its Jacobian.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--tol", type=float, default=1e-8, help="tolerance for the floating root route")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    coeff_help = "comma-separated rationals, constant term first, e.g. 0,1,1/4"
    p = sub.add_parser("moments", parents=[common], help="moment vector and Cauchy series")
    p.add_argument("--coeffs", required=True, help=coeff_help)
    p.add_argument("--terms", type=int, default=0, help="also print this many Cauchy-series terms")

    p = sub.add_parser("jacobian", parents=[common], help="Jacobian determinant by several routes")
    p.add_argument("--coeffs", required=True, help=coeff_help)
    p.add_argument("--routes", default="all", help=f"'all' or a subset of {','.join(ROUTES)}")

    p = sub.add_parser("classify", parents=[common], help="interior/boundary/exterior verdict")
    p.add_argument("--coeffs", required=True, help=coeff_help)

    p = sub.add_parser("verify", parents=[common], help="invariant sweep over random samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def render_table(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for key in ("inputs", "seed"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    lines.append("outputs:")
    for name, value in report["outputs"].items():
        lines.append(f"  {name:<20} {_plain(value)}")
    lines.append("agreement:")
    for name, ok in report["agree"].items():
        lines.append(f"  {name:<20} {'true' if ok else 'FALSE'}")
    if "timing_ms" in report:
        lines.append(f"timing_ms: {report['timing_ms']:.1f}")
    if "error" in report:
        lines.append(f"error: {report['error']}")
    return "\n".join(lines)


def _plain(value) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_plain(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}={_plain(v)}" for k, v in value.items())
    if isinstance(value, complex):
        return f"{value.real:.12g}{value.imag:+.3g}j"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report: dict = {"command": args.command}
    if getattr(args, "coeffs", None) is not None:
        report["inputs"] = [s.strip() for s in args.coeffs.split(",")]
    if args.command == "verify":
        report["inputs"] = {"n": args.n, "trials": args.trials}
        report["seed"] = args.seed

    start = time.perf_counter()
    status = EXIT_OK
    try:
        report.update(COMMANDS[args.command](args))
        if not all(report["agree"].values()):
            status = EXIT_FAIL
    except InputError as exc:
        report.update(outputs={}, agree={}, error=str(exc))
        status = EXIT_INPUT
    except RouteMismatch as exc:
        report.update(outputs={}, agree={"routes": False}, error=str(exc))
        status = EXIT_FAIL
    except NumericalFailure as exc:
        report.update(outputs={}, agree={}, error=str(exc))
        status = EXIT_NUMERIC
    if args.timing:
        report["timing_ms"] = (time.perf_counter() - start) * 1000.0

    if args.format == "json":
        print(json.dumps(fmt_value(report), indent=2, sort_keys=False))
    else:
        print(render_table(report))
    if "error" in report:
        print(f"momentjac: {report['error']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
