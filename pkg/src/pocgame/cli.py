"""Command-line front end.

Every command writes CSV or JSON to stdout (or ``--out``).  Exit codes:
0 success, 1 negative verdict or failed self-test, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from . import certification as cert
from . import robustness as rob
from .checks import SuiteOptions, run_checks
from .classical import MAX_ALPHABET, enumerate_max
from .game import PREP_KEYS, YS
from .quantum import (
    charlie_success_numeric,
    ideal_config,
    omega_b,
    omega_c,
    omega_c_exact,
    trine_preparations,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_IO = 3
DEFAULT_STEPS = 201


class UsageError(Exception):
    pass


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def render_json(payload: Any) -> str:
    return json.dumps(_jsonable(payload), indent=2) + "\n"


def _render_table(fmt: str, header: Sequence[str], rows: list[Sequence[Any]],
                  extra: Optional[dict] = None) -> str:
    if fmt == "json":
        payload = dict(extra or {})
        payload["rows"] = [dict(zip(header, row)) for row in rows]
        return render_json(payload)
    return render_csv(header, rows)


def _positive(kind: type, name: str, minimum: float):
    def parse(text: str):
        try:
            value = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be a number, got {text!r}")
        if not value >= minimum:
            raise argparse.ArgumentTypeError(f"{name} must be at least {minimum}, got {text!r}")
        return value
    return parse


def _linspace(start: float, stop: float, steps: int) -> np.ndarray:
    if start > stop:
        raise UsageError("start must not exceed stop")
    return np.linspace(start, stop, steps)


def cmd_classical_bound(args) -> tuple[str, int]:
    if not 1 <= args.d <= MAX_ALPHABET:
        raise UsageError(f"-d must be in [1, {MAX_ALPHABET}]")
    res = enumerate_max(args.d)
    best = res.argmax[0]
    encoder = " ".join(f"{x}{a}->{best.encoder[(x, a)]}" for x, a in PREP_KEYS)
    decoder = " ".join(
        f"{m}:" + "".join(str(best.decoder[(m, y)]) for y in YS) for m in range(1, args.d + 1)
    )
    record = {
        "d": args.d,
        "max_success": str(res.max_success),
        "max_success_decimal": float(res.max_success),
        "strategies_searched": res.strategies_searched,
        "parity_oblivious_encoders": res.parity_oblivious_encoders,
        "argmax_count": len(res.argmax),
        "example_encoder": encoder,
        "example_decoder": decoder,
    }
    if args.format == "json":
        return render_json(record), EXIT_OK
    if args.format == "csv":
        return render_csv(list(record), [list(record.values())]), EXIT_OK
    lines = [f"{res.max_success} ({float(res.max_success):.6f})"]
    lines += [f"{k}: {_fmt(v)}" for k, v in record.items() if k not in ("max_success",)]
    return "\n".join(lines) + "\n", EXIT_OK


TRADEOFF_HEADER = ("eta_B", "omega_B", "omega_C_closed", "omega_C_numeric",
                   "omega_C_exact", "classical_bound")


def tradeoff_rows(etas: Iterable[float]) -> list[tuple]:
    prep = trine_preparations()
    rows = []
    for eta in etas:
        eta = float(eta)
        rows.append((eta, omega_b(eta), omega_c(eta, 1.0),
                     charlie_success_numeric(prep, ideal_config(eta)),
                     omega_c_exact(eta, 1.0), cert.CLASSICAL_BOUND))
    return rows


def cmd_tradeoff(args) -> tuple[str, int]:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2 for the trade-off sweep")
    if not 0.0 <= args.start <= 1.0 or not 0.0 <= args.stop <= 1.0:
        raise UsageError("eta_B range must lie inside [0, 1]")
    etas = list(_linspace(args.start, args.stop, args.steps))
    for extra in args.eta_b or []:
        if not 0.0 <= extra <= 1.0:
            raise UsageError("--eta-b must lie in [0, 1]")
        etas.append(extra)
    etas = sorted(set(float(e) for e in etas))
    return _render_table(args.format, TRADEOFF_HEADER, tradeoff_rows(etas)), EXIT_OK


def cmd_certify(args) -> tuple[str, int]:
    for name, value in (("A_B", args.a_b), ("A_C", args.a_c)):
        if not 0.0 <= value <= 1.0:
            raise UsageError(f"{name} must lie in [0, 1]")
    verdict = cert.certify(cert.ObservedPair(args.a_b, args.a_c), args.tol or cert.DEFAULT_CURVE_TOL)
    record = {"A_B": args.a_b, "A_C": args.a_c, **verdict.as_dict()}
    code = EXIT_OK if verdict.both_quantum else EXIT_NEGATIVE
    if args.format == "csv":
        flat = dict(record)
        interval = flat.pop("eta_B_interval") or (None, None)
        flat["eta_B_lo"], flat["eta_B_hi"] = interval
        return render_csv(list(flat), [list(flat.values())]), code
    return render_json(record), code


DEBBIE_HEADER = ("zeta", "eta_B", "eta_C_min", "eta_C_linear", "eta_D_required",
                 "eta_D_required_sharp_C", "feasible", "eta_C_min_exact",
                 "eta_D_required_exact", "feasible_exact")


def cmd_debbie(args) -> tuple[str, int]:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    sweep = cert.zeta_sweep(args.steps)
    rows = [(r.zeta, r.eta_b, r.eta_c_min, r.eta_c_linear, r.required_eta_d,
             r.required_eta_d_sharp_c, r.feasible, r.eta_c_min_exact,
             r.required_eta_d_exact, cert.is_feasible(r.required_eta_d_exact))
            for r in sweep]
    least = min(r.required_eta_d for r in sweep)
    least_exact = min(r.required_eta_d_exact for r in sweep)
    summary = {
        "min_eta_D_required": least,
        "verdict": "infeasible" if least > 1.0 else "feasible",
        "min_eta_D_required_exact": least_exact,
        "verdict_exact": "infeasible" if least_exact > 1.0 else "feasible",
    }
    if args.format == "json":
        return _render_table("json", DEBBIE_HEADER, rows, summary), EXIT_OK
    _note(" ".join(f"{k}={_fmt(v)}" for k, v in summary.items()))
    return render_csv(DEBBIE_HEADER, rows), EXIT_OK


ROBUSTNESS_HEADER = ("success_probability", "fidelity_lower_bound")


def robustness_summary(scenario: str, eta_b: float, grid_n: int, tol: float) -> dict:
    s = rob.default_s(scenario, eta_b)
    t_claim = rob.paper_t(scenario, eta_b)
    res = rob.minimize_t(scenario, s, eta_b, grid_n)
    rep = rob.verify_operator_inequalities(scenario, s, eta_b, t_claim, grid_n, tol)
    return {
        "scenario": scenario,
        "eta_B": eta_b,
        "s": s,
        "t_paper": t_claim,
        "t_min": res.t_value,
        "theta_argmin": res.theta_argmin,
        "worst_lambda_min": rep.worst_lambda_min,
        "inequalities_hold": rep.inequalities_hold,
        "t_paper_margin": rep.worst_margin,
        "grid_n": grid_n,
    }


def cmd_robustness(args) -> tuple[str, int]:
    eta = args.eta_b
    if not 0.0 < eta <= 1.0:
        raise UsageError("--eta-b must lie in (0, 1]")
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    bound_fn = rob.FIDELITY_BOUNDS[args.scenario]
    top = rob.optimum(args.scenario, eta)
    lo = min(cert.CLASSICAL_BOUND, top)
    degenerate = top - cert.CLASSICAL_BOUND <= 1e-12
    grid = [top] if degenerate else list(np.linspace(lo, top, args.steps))
    rows = [(a, bound_fn(a, eta)) for a in grid]
    summary = robustness_summary(args.scenario, eta, args.grid_n, args.tol or 1e-9)
    summary["degenerate"] = degenerate
    if args.format == "json":
        return _render_table("json", ROBUSTNESS_HEADER, rows, summary), EXIT_OK
    _note(" ".join(f"{k}={_fmt(v)}" for k, v in summary.items()))
    return render_csv(ROBUSTNESS_HEADER, rows), EXIT_OK


def cmd_verify_all(args) -> tuple[str, int]:
    opts = SuiteOptions(seed=args.seed, samples=args.samples,
                        theta=rob.THETA_SPLIT + args.perturb_theta, tol=args.tol or 1e-9)
    if not 0.0 <= opts.theta <= np.pi / 2:
        raise UsageError("perturbed theta leaves [0, pi/2]")
    results = run_checks(opts, include_claims=args.claims)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE
    if args.format == "json":
        payload = {r.name: {"group": r.group, "passed": r.passed, "detail": r.detail}
                   for r in results}
        return render_json(payload), code
    if args.format == "csv":
        return render_csv(("name", "group", "passed", "detail"),
                          [(r.name, r.group, r.passed, r.detail) for r in results]), code
    lines = [f"{'PASS' if r.passed else 'FAIL'} [{r.group}] {r.name}: {r.detail}" for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", code


def _note(text: str) -> None:
    print(text, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pocgame",
        description="Parity-oblivious communication game with sequential unsharp receivers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--tol", type=_positive(float, "--tol", 1e-300), default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classical-bound", parents=[common],
                       help="exhaustive classical parity-oblivious bound")
    p.add_argument("-d", type=int, default=3, help="message alphabet size (1..6)")
    p.set_defaults(func=cmd_classical_bound)

    p = sub.add_parser("tradeoff", parents=[common], help="Bob/Charlie optimal-pair sweep")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=1.0)
    p.add_argument("--eta-b", type=float, action="append",
                   help="extra eta_B value to include (repeatable)")
    p.set_defaults(func=cmd_tradeoff)

    p = sub.add_parser("certify", parents=[common], help="certify eta_B from (A_B, A_C)")
    p.add_argument("a_b", type=float, metavar="A_B")
    p.add_argument("a_c", type=float, metavar="A_C")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("debbie", parents=[common], help="third-observer requirement sweep")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.set_defaults(func=cmd_debbie)

    p = sub.add_parser("robustness", parents=[common], help="fidelity lower-bound sweep")
    p.add_argument("scenario", choices=rob.SCENARIOS)
    p.add_argument("--eta-b", type=float, default=0.76)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--grid-n", type=_positive(int, "--grid-n", 64), default=rob.DEFAULT_GRID_N)
    p.set_defaults(func=cmd_robustness)

    p = sub.add_parser("verify-all", parents=[common], help="run the invariant self-test")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_positive(int, "--samples", 1), default=2000)
    p.add_argument("--perturb-theta", type=float, default=0.0,
                   help="shift the trine angle to exercise failure detection")
    p.add_argument("--claims", action="store_true",
                   help="also compare against published closed forms (several fail)")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"pocgame {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"pocgame {args.command}: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
