"""Command-line front end: ``qhdg {play,sweep,analyze,validate,classical}``.

Exit codes: 0 success, 2 argument or validation error, 3 closed-form
validation failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import quantum_core as qc
from .equilibrium import DEFAULT_GRID_N, TIE_TOL, analyze, critical_gamma
from .ewl_protocol import RESTRICTIONS, play, sample_outcomes, validate_closed_form
from .exceptions import DomainError
from .game_model import FIG2_PARAMETERS, classical_mixed_ess, make_payoff_matrix
from .strategy_space import DOVE, HAWK, QUANTUM, Strategy

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION_FAILED = 3

DEFAULT_STEPS = 256
SWEEP_COLUMNS = ("gamma", "payoff_D_vs_Q", "payoff_H_vs_Q", "payoff_Q_vs_Q")


def parse_angle(text: str) -> float:
    """Radians, or degrees when suffixed with ``deg`` (``"45deg"``)."""
    text = text.strip()
    try:
        if text.endswith("deg"):
            return float(np.deg2rad(float(text[:-3])))
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid angle {text!r}") from None


def parse_strategy(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'theta,phi', got {text!r}")
    return parse_angle(parts[0]), parse_angle(parts[1])


def fmt(x: float) -> str:
    return f"{x:.12g}"


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _matrix(args):
    return make_payoff_matrix(args.v, args.i, args.d)


def cmd_play(args) -> tuple[str, int]:
    m = _matrix(args)
    row, col = Strategy(*args.row), Strategy(*args.col)
    gamma = qc.check_gamma(args.gamma)
    outcome = play(row, col, gamma, m)
    doc = {"gamma": gamma, "row": row.as_list(), "col": col.as_list(), **outcome.as_dict()}
    if args.shots:
        doc["counts"] = sample_outcomes(outcome, args.shots, np.random.default_rng(args.seed))
        doc["seed"] = args.seed
    if args.format == "csv":
        keys = ["gamma", "p_dd", "p_dh", "p_hd", "p_hh", "payoff_row", "payoff_col"]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(keys)
        writer.writerow([fmt(doc[k]) for k in keys])
        return buf.getvalue(), EXIT_OK
    return dump_json(doc), EXIT_OK


def sweep_rows(m, steps: int) -> list[dict]:
    """Payoffs of D, H and Q against Q at evenly spaced gamma in [0, pi/4]."""
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps}")
    rows = []
    for k in range(steps):
        gamma = k * qc.GAMMA_MAX / (steps - 1)
        rows.append({
            "gamma": gamma,
            "payoff_D_vs_Q": play(DOVE, QUANTUM, gamma, m).payoff_row,
            "payoff_H_vs_Q": play(HAWK, QUANTUM, gamma, m).payoff_row,
            "payoff_Q_vs_Q": play(QUANTUM, QUANTUM, gamma, m).payoff_row,
        })
    return rows


def cmd_sweep(args) -> tuple[str, int]:
    m = _matrix(args)
    rows = sweep_rows(m, args.steps)
    meta = {"v": m.v, "i": m.i, "d": m.d, "steps": args.steps, "gamma_c": critical_gamma(m)}
    if args.format == "json":
        return dump_json({"metadata": meta, "rows": rows}), EXIT_OK
    buf = io.StringIO()
    for key in ("gamma_c", "v", "i", "d", "steps"):
        value = meta[key]
        buf.write(f"# {key}={value if isinstance(value, int) else fmt(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for r in rows:
        writer.writerow([fmt(r[c]) for c in SWEEP_COLUMNS])
    return buf.getvalue(), EXIT_OK


def cmd_analyze(args) -> tuple[str, int]:
    report = analyze(args.gamma, _matrix(args), grid_n=args.grid_n)
    return dump_json(report.as_dict()), EXIT_OK


def cmd_validate(args) -> tuple[str, int]:
    m = _matrix(args)
    report = validate_closed_form(args.samples, args.tolerance, m, restrict=args.restrict,
                                  form=args.form, seed=args.seed)
    return report.to_json(), EXIT_OK if report.passed else EXIT_VALIDATION_FAILED


def cmd_classical(args) -> tuple[str, int]:
    m = _matrix(args)
    eq = classical_mixed_ess(m)
    return dump_json({"payoff_matrix": m.as_dict(), **eq.as_dict()}), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qhdg", description="Quantum Hawk-Dove game toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--v", type=float, default=FIG2_PARAMETERS["v"], help="resource value")
    common.add_argument("--i", type=float, default=FIG2_PARAMETERS["i"], help="injury cost")
    common.add_argument("--d", type=float, default=FIG2_PARAMETERS["d"], help="display cost")
    common.add_argument("--output", default="-", help="output path (default: stdout)")

    p = sub.add_parser("play", parents=[common], help="evaluate one game")
    p.add_argument("--row", type=parse_strategy, required=True, metavar="THETA,PHI")
    p.add_argument("--col", type=parse_strategy, required=True, metavar="THETA,PHI")
    p.add_argument("--gamma", type=parse_angle, required=True)
    p.add_argument("--shots", type=int, default=0, help="also sample measurement counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("sweep", parents=[common], help="payoffs of D, H, Q against Q over gamma")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("analyze", parents=[common], help="equilibrium report for (Q, Q)")
    p.add_argument("--gamma", type=parse_angle, required=True)
    p.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("validate", parents=[common], help="audit the closed-form payoff")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--restrict", choices=RESTRICTIONS, default="none")
    p.add_argument("--form", choices=("corrected", "printed"), default="corrected")
    p.add_argument("--tolerance", type=float, default=TIE_TOL)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classical", parents=[common], help="classical mixed ESS baseline")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_classical)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except DomainError as exc:
        print(f"qhdg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
