"""Command-line front end.

Subcommands: ``eval`` computes the measures of a state file, ``bipartitions``
lists the canonical cuts, ``paper`` evaluates the built-in benchmark states
against their published reference values, and ``random`` runs one of the
seeded property checks. Exit status is 0 only when everything requested
succeeded; parse failures and failed checks are nonzero. Human-readable
output prints 4 decimals; ``--json`` carries full precision.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import __version__
from .bipartitions import canonical_bipartitions
from .catalog import PUBLISHED_TOL, PUBLISHED_VALUES, benchmark_states
from .measures import DEFAULT_ZERO_TOL, MeasureReport, evaluate
from .states import StateFormatError, load_state
from .verify import CHECK_NAMES, TrialConfig, TrialOutcome, run_check

REPORT_SCHEMA = "gme-pyramid-report/1"


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def _state_json(report: MeasureReport) -> dict:
    return {
        "id": report.state_id,
        "dims": list(report.dims),
        "volume": report.volume,
        "c_gme": report.c_gme,
        "triangle": report.triangle,
        "classification": report.classification,
        "concurrences": {cut.label(): value for cut, value in report.concurrences.items()},
        "zero_cuts": [cut.label() for cut in report.zero_cuts],
        "notes": list(report.notes),
    }


def report_document(
    states: list[MeasureReport],
    zero_tol: float,
    paper_rows: list[dict] | None = None,
    checks: list[TrialOutcome] | None = None,
) -> dict:
    doc = {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "tolerances": {"zero": zero_tol},
        "states": [_state_json(r) for r in states],
    }
    if paper_rows is not None:
        doc["paper_rows"] = paper_rows
    if checks is not None:
        doc["checks"] = [
            {
                "check": c.check,
                "trials": c.trials,
                "max_deviation": c.max_deviation,
                "tolerance": c.tolerance,
                "passed": c.passed,
                "worst_trial": c.worst_trial,
            }
            for c in checks
        ]
    return doc


def dumps_report(doc: dict) -> str:
    """Canonical JSON rendering: parsing and re-dumping is byte-identical."""
    return json.dumps(doc, indent=2, sort_keys=True)


def _print_report(report: MeasureReport) -> None:
    print(f"state: {report.state_id} (dims {'x'.join(str(d) for d in report.dims)})")
    print(f"classification: {report.classification}")
    if report.volume is not None:
        print(f"volume: {_fmt(report.volume)}")
    print(f"c_gme: {_fmt(report.c_gme)}")
    if report.triangle is not None:
        print(f"triangle: {_fmt(report.triangle)}")
    print("concurrences:")
    for cut, value in report.concurrences.items():
        print(f"  {cut.label():<12} {value:.4f}")
    if report.zero_cuts:
        print("zero cuts: " + "; ".join(cut.label() for cut in report.zero_cuts))
    else:
        print("zero cuts: none")
    for note in report.notes:
        print(f"note: {note}")


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        state = load_state(args.file, normalize=args.normalize)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StateFormatError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2
    if state.n == 2 and args.measure in ("volume", "all"):
        print(
            "error: no pyramid volume is defined for 2 parties; "
            "rerun with --measure cgme for the single-cut concurrence",
            file=sys.stderr,
        )
        return 2
    if state.n != 3 and args.measure == "triangle":
        print("error: the triangle measure needs exactly 3 parties", file=sys.stderr)
        return 2
    report = evaluate(state, state_id=str(args.file), zero_tol=args.tol)
    if args.json:
        print(dumps_report(report_document([report], args.tol)))
    elif args.measure == "volume":
        print(_fmt(report.volume))
    elif args.measure == "cgme":
        print(_fmt(report.c_gme))
    elif args.measure == "triangle":
        print(_fmt(report.triangle))
    else:
        _print_report(report)
    return 0


def cmd_bipartitions(args: argparse.Namespace) -> int:
    try:
        cuts = canonical_bipartitions(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for size, group in itertools.groupby(cuts, key=lambda c: c.size):
        print(f"# k={size}")
        for cut in group:
            print(cut.label())
    return 0


def cmd_paper(args: argparse.Namespace) -> int:
    reports = []
    rows = []
    for state_id, state in benchmark_states().items():
        report = evaluate(state, state_id=state_id, zero_tol=args.tol)
        reports.append(report)
        computed = {"volume": report.volume, "c_gme": report.c_gme}
        for quantity, expected in PUBLISHED_VALUES[state_id].items():
            value = computed[quantity]
            deviation = abs(value - expected)
            rows.append(
                {
                    "id": state_id,
                    "quantity": quantity,
                    "expected": expected,
                    "computed": value,
                    "deviation": deviation,
                    "flagged": deviation > PUBLISHED_TOL[quantity],
                }
            )
    if args.json:
        print(dumps_report(report_document(reports, args.tol, paper_rows=rows)))
        return 0
    print(f"{'state':<11}{'quantity':<9}{'published':>10}{'computed':>10}{'deviation':>11}")
    for row in rows:
        marker = "  <- not reproduced by the defining formulas" if row["flagged"] else ""
        print(
            f"{row['id']:<11}{row['quantity']:<9}{row['expected']:>10.4f}"
            f"{row['computed']:>10.4f}{row['deviation']:>11.2e}{marker}"
        )
    return 0


def cmd_random(args: argparse.Namespace) -> int:
    try:
        dims = tuple(int(d) for d in args.dims.split(","))
    except ValueError:
        print(f"error: --dims expects comma-separated integers, got {args.dims!r}", file=sys.stderr)
        return 2
    try:
        config = TrialConfig(dims=dims, trials=args.trials, seed=args.seed, tol=args.tol)
        outcome = run_check(args.check, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(dumps_report(report_document([], DEFAULT_ZERO_TOL, checks=[outcome])))
    else:
        status = "pass" if outcome.passed else "FAIL"
        print(
            f"{outcome.check}: {status} (trials {outcome.trials}, "
            f"max deviation {outcome.max_deviation:.3e}, tolerance {outcome.tolerance:.1e}, "
            f"worst trial {outcome.worst_trial})"
        )
    return 0 if outcome.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmepyramid",
        description="Geometric multipartite entanglement measures from concurrence pyramid volumes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one state file")
    p_eval.add_argument("file", help="state file (see the states module for the format)")
    p_eval.add_argument(
        "--measure", choices=("volume", "cgme", "triangle", "all"), default="all"
    )
    p_eval.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL, help="zero-concurrence cutoff")
    p_eval.add_argument("--normalize", action="store_true", help="rescale the input to unit norm")
    p_eval.add_argument("--json", action="store_true", help="machine-readable report")
    p_eval.set_defaults(func=cmd_eval)

    p_bip = sub.add_parser("bipartitions", help="list the canonical cuts of an N-party system")
    p_bip.add_argument("n", type=int)
    p_bip.set_defaults(func=cmd_bipartitions)

    p_paper = sub.add_parser(
        "paper", help="evaluate the built-in benchmark states against published values"
    )
    p_paper.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL, help="zero-concurrence cutoff")
    p_paper.add_argument("--json", action="store_true")
    p_paper.set_defaults(func=cmd_paper)

    p_rand = sub.add_parser("random", help="run a seeded property check")
    p_rand.add_argument("--dims", required=True, help="comma-separated subsystem dimensions")
    p_rand.add_argument("--seed", type=int, default=0)
    p_rand.add_argument("--trials", type=int, default=100)
    p_rand.add_argument("--check", required=True, choices=CHECK_NAMES)
    p_rand.add_argument("--tol", type=float, default=None, help="override the check's tolerance")
    p_rand.add_argument("--json", action="store_true")
    p_rand.set_defaults(func=cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
