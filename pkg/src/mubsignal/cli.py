"""Command-line front end: ``mubsignal {verify,probs,simulate,capacity}``.

Exit codes: 0 success, 1 an invariant suite failed, 2 usage or
configuration error. The payload goes to stdout (or ``--out``), diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import replace

from .config import Tolerances
from .entangle import Preparation
from .info import info_report
from .modmath import PrimeDim
from .mub import parse_label
from .protocol import all_outcomes, closed_form_table, outcome_probabilities, run_trials
from .verify import MAX_DENSE_DIM, run_all

SWEEP_DIMS = (2, 3, 5, 7, 11, 13)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, help="prime qudit dimension d")
    common.add_argument("--seed", type=_u64, default=0, help="RNG seed (unsigned 64-bit)")
    common.add_argument("--trials", type=int, default=10_000, help="Monte Carlo rounds for simulate")
    common.add_argument("--prep", help="Alice's preparation as c,r,s")
    common.add_argument("--message", help="Bob's basis: ddot0 or an integer in [0, d)")
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")
    common.add_argument("--out", help="also write the payload to this file")
    common.add_argument("--sweep", action="store_true", help="capacity: sweep d over %s" % (SWEEP_DIMS,))
    common.add_argument(
        "--parallel", nargs="?", type=int, const=0, default=None, metavar="N",
        help="simulate with N worker processes (default: one per CPU)",
    )
    common.add_argument("--samples", type=int, default=50, help="sampled cases for non-exhaustive suites")
    common.add_argument("--tol-structural", type=float, help="override the structural tolerance")
    common.add_argument("--tol-oracle", type=float, help="override the oracle tolerance")

    parser = argparse.ArgumentParser(
        prog="mubsignal", description="Signaling by the choice of a non-selective MUB measurement."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run every invariant suite for --dim")
    sub.add_parser("probs", parents=[common], help="outcome probabilities, closed form vs brute force")
    sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo run of the protocol")
    sub.add_parser("capacity", parents=[common], help="mutual information per channel use")
    return parser


def _dim(args) -> int:
    if args.dim is None:
        raise UsageError("--dim is required")
    try:
        return PrimeDim(args.dim).d
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _tolerances(args) -> Tolerances:
    tol = Tolerances.from_env()
    if args.tol_structural is not None:
        tol = replace(tol, structural=args.tol_structural)
    if args.tol_oracle is not None:
        tol = replace(tol, oracle=args.tol_oracle)
    return tol


def _prep(args, d):
    if args.prep is None:
        return None
    try:
        return Preparation.parse(args.prep, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _message(args, d):
    if args.message is None:
        return None
    try:
        return parse_label(args.message, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- commands: each returns (exit code, payload, csv rows) -------------------


def cmd_verify(args):
    d = _dim(args)
    reports = run_all(d, _tolerances(args), samples=args.samples, seed=args.seed)
    passed = all(r.passed for r in reports)
    skipped = [] if d <= MAX_DENSE_DIM else ["entangled_basis", "channel", "oracle"]
    if skipped:
        print(f"note: dense two-qudit suites skipped for d > {MAX_DENSE_DIM}: {', '.join(skipped)}", file=sys.stderr)
    results = {"passed": passed, "suites": [r.to_dict() for r in reports], "skipped": skipped}
    rows = [
        {"suite": r.suite, "check": name, "max_deviation": v, "tolerance": r.tolerance, "passed": v <= r.tolerance}
        for r in reports
        for name, v in r.deviations.items()
    ]
    return (EXIT_OK if passed else EXIT_FAIL), d, results, rows


def cmd_probs(args):
    d = _dim(args)
    prep, message = _prep(args, d), _message(args, d)
    if prep is None or message is None:
        raise UsageError("probs needs both --prep c,r,s and --message")
    closed = closed_form_table(d, message, prep)
    brute = outcome_probabilities(d, message, prep)
    rows = []
    for out in all_outcomes(d):
        cf = float(closed[out.c_prime, out.r_prime])
        bf = float(brute[out.c_prime, out.r_prime])
        rows.append({"c_prime": out.c_prime, "r_prime": out.r_prime, "closed_form": cf, "brute_force": bf,
                     "abs_diff": abs(cf - bf)})
    results = {
        "prep": {"c": prep.c, "r": prep.r, "s": prep.s},
        "message": str(message),
        "rows": rows,
        "max_abs_diff": max(r["abs_diff"] for r in rows),
        "sum_closed_form": float(closed.sum()),
        "sum_brute_force": float(brute.sum()),
        "inconclusive_outcome": {"c_prime": prep.c, "r_prime": prep.r,
                                 "probability": float(closed[prep.c, prep.r])},
    }
    return EXIT_OK, d, results, rows


def cmd_simulate(args):
    d = _dim(args)
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    prep, message = _prep(args, d), _message(args, d)
    prior = None if message is None else {message: 1.0}
    workers = None
    if args.parallel is not None:
        workers = max(args.parallel or os.cpu_count() or 1, 2)
    stats = run_trials(args.seed, d, prep if prep is not None else "uniform", prior, args.trials, workers)
    results = stats.to_dict()
    results["prep_policy"] = str(prep) if prep is not None else "uniform"
    results["message_prior"] = "uniform" if message is None else str(message)
    results["expected_conclusive_rate"] = (d - 1) / d
    rows = [
        {"sent": sent, "decoded": dec, "count": n}
        for sent, row in results["confusion"].items()
        for dec, n in row.items()
    ] + [{"sent": sent, "decoded": "inconclusive", "count": n} for sent, n in results["inconclusive_per_message"].items()]
    return EXIT_OK, d, results, rows


def cmd_capacity(args):
    if args.sweep:
        rows = [info_report(d).to_dict() for d in SWEEP_DIMS]
        return EXIT_OK, list(SWEEP_DIMS), rows, rows
    d = _dim(args)
    prep = _prep(args, d) or Preparation(0, 0, 0)
    row = info_report(d, prep).to_dict()
    return EXIT_OK, d, row, [row]


COMMANDS = {"verify": cmd_verify, "probs": cmd_probs, "simulate": cmd_simulate, "capacity": cmd_capacity}


# --- rendering ---------------------------------------------------------------


def render(payload: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in row.items()})
        return buf.getvalue()
    lines = [f"command: {payload['command']}", f"dim: {payload['dim']}", f"seed: {payload['seed']}"]
    _human(payload["results"], lines, indent=0)
    return "\n".join(lines) + "\n"


def _human(value, lines, indent):
    pad = "  " * indent
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                _human(v, lines, indent + 1)
            else:
                lines.append(f"{pad}{k}: {v!r}" if isinstance(v, float) else f"{pad}{k}: {v}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict) and all(not isinstance(v, (dict, list)) for v in item.values()):
                lines.append(pad + "- " + "  ".join(
                    f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}" for k, v in item.items()))
            else:
                lines.append(pad + "-")
                _human(item, lines, indent + 1)
    else:
        lines.append(f"{pad}{value}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        code, dim, results, rows = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"mubsignal {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"command": args.command, "dim": dim, "seed": args.seed, "results": results}
    text = render(payload, rows, args.format)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
