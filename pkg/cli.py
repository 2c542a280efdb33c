import argparse
import csv
import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).parent))

from dotenv import load_dotenv

from monoclass.catalog import (
    FIGURE_SETTINGS,
    TABLE_IDS,
    membership_regions,
    regions_to_csv,
    regions_to_dot,
    rotation,
    rows_to_csv,
    rows_to_markdown,
    rows_to_text,
    table_rows,
)
from monoclass.config import default_tolerance, log_level
from monoclass.errors import ArgumentError, ConfigError, DimensionError, InputError, MonoclassError
from monoclass.numerics import Tolerance
from monoclass.operators import ClassificationReport, MatrixOperator, classify, is_n_cyclic
from monoclass.relations import classify_relation, relation_from_graph
from monoclass.utils import format_number, parse_matrix, parse_relation_rows, read_source, round_floats
from monoclass.verify import SUITES, run_suites

load_dotenv()

logger = logging.getLogger("monoclass.cli")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2

SWEEP_PROBE = 1e-4


def _tolerance(args: argparse.Namespace) -> Tolerance:
    tol = default_tolerance()
    if getattr(args, "tol", None) is None:
        return tol
    if not args.tol > 0:
        raise ArgumentError(f"--tol must be positive, got {args.tol}")
    return tol.model_copy(update={"abs": args.tol, "eig_rel": args.tol})


def _dump_json(payload: object) -> str:
    return json.dumps(round_floats(payload), indent=2, ensure_ascii=False)


def _report_fields(report: ClassificationReport) -> List[tuple[str, str]]:
    rows = [
        ("kind", report.kind),
        ("dim", str(report.dim)),
        ("code", report.code.render()),
        ("monotone", str(report.monotone).lower()),
        ("lambda_min_sym", format_number(report.lambda_min_sym)),
        ("dim_ker_sym", str(len(report.ker_sym))),
        ("dim_ker_full", str(len(report.ker_full))),
    ]
    if report.alpha_star is not None:
        alpha = report.alpha_star if isinstance(report.alpha_star, str) else format_number(report.alpha_star)
        rows.append(("alpha_star", alpha))
    if report.cycle_witness is not None:
        rows.append(("cycle_sum", format_number(report.cycle_witness.cycle_sum)))
    if report.relation is not None:
        summary = report.relation
        rows += [
            ("graph_dim", str(summary.graph_dim)),
            ("dom_dim", str(summary.dom_dim)),
            ("ran_dim", str(summary.ran_dim)),
            ("a0_dim", str(summary.a0_dim)),
            ("maximal", str(summary.maximal).lower()),
        ]
    return rows


def _report_text(report: ClassificationReport) -> str:
    rows = _report_fields(report)
    width = max(len(key) for key, _ in rows)
    lines = [f"{key:<{width}}  {value}" for key, value in rows]
    lines += [f"note: {note}" for note in report.notes]
    return "\n".join(lines)


def _report_csv(report: ClassificationReport) -> str:
    """Header plus one row; notes share a single cell, separated by "; "."""
    rows = _report_fields(report) + [("notes", "; ".join(report.notes))]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([key for key, _ in rows])
    writer.writerow([value for _, value in rows])
    return buffer.getvalue()


def _print_report(report: ClassificationReport, fmt: str) -> None:
    if fmt == "text":
        print(_report_text(report))
    elif fmt == "csv":
        sys.stdout.write(_report_csv(report))
    else:
        print(_dump_json(report.model_dump(mode="json")))


def cmd_classify(args: argparse.Namespace) -> int:
    text, source = read_source(args.inline, args.file)
    op = MatrixOperator.from_rows(parse_matrix(text, source))
    _print_report(classify(op, _tolerance(args)), args.format)
    return EXIT_OK


def cmd_classify_relation(args: argparse.Namespace) -> int:
    text, source = read_source(args.inline, args.file)
    tol = _tolerance(args)
    rel = relation_from_graph(parse_relation_rows(text, source), tol)
    _print_report(classify_relation(rel, tol, probe_seed=args.seed), args.format)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    rows = table_rows(args.which, alpha_decay=args.alpha_decay, tol=_tolerance(args))
    if args.format == "json":
        print(_dump_json([row.model_dump(mode="json") for row in rows]))
    elif args.format == "markdown":
        sys.stdout.write(rows_to_markdown(rows))
    elif args.format == "text":
        sys.stdout.write(rows_to_text(rows))
    else:
        sys.stdout.write(rows_to_csv(rows))
    return EXIT_OK


def sweep_angles(n_max: int, grid: int) -> List[float]:
    if n_max < 2:
        raise ArgumentError(f"--n-max must be at least 2, got {n_max}")
    if grid < 2:
        raise ArgumentError(f"--grid must be at least 2, got {grid}")
    angles = {(math.pi / 2) * i / (grid - 1) for i in range(grid)}
    for n in range(2, n_max + 1):
        angles.update({math.pi / n - SWEEP_PROBE, math.pi / n + SWEEP_PROBE})
    return sorted(angles)


def cmd_sweep(args: argparse.Namespace) -> int:
    tol = _tolerance(args)
    angles = sweep_angles(args.n_max, args.grid)
    lines = ["theta,n,is_n_cyclic"]
    for theta in angles:
        op = rotation(theta)
        for n in range(2, args.n_max + 1):
            cyclic = is_n_cyclic(op, n, tol).cyclic
            lines.append(f"{format_number(theta)},{n},{str(cyclic).lower()}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suites(
        seed=args.seed,
        budget=args.budget,
        suites=args.suite,
        inject_fault=args.inject_fault,
        tol=_tolerance(args),
    )
    payload = {
        "seed": report.seed,
        "budget": report.budget,
        "ok": report.ok,
        "suites": report.counts(),
        "failures": [
            {"suite": suite.suite, **failure.model_dump(mode="json")}
            for suite in report.suites
            for failure in suite.failures
        ],
    }
    print(_dump_json(payload))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_figure(args: argparse.Namespace) -> int:
    regions = membership_regions(args.setting)
    sys.stdout.write(regions_to_dot(regions) if args.format == "dot" else regions_to_csv(regions))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="Override abs and eig_rel tolerances")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--inline", help="Rows as JSON (array of arrays) or CSV text")
    source.add_argument("--file", help="Path to a JSON or CSV file")

    parser = argparse.ArgumentParser(
        prog="monoclass",
        description="Classify monotone linear operators and relations (PM-SM-3CM-MM-3*).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, source], help="Classify a square matrix")
    p.add_argument("--format", choices=["json", "text", "csv"], default="json")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser(
        "classify-relation",
        parents=[common, source],
        help="Classify a linear relation given by rows (x; x*) spanning its graph",
    )
    p.add_argument("--format", choices=["json", "text", "csv"], default="json")
    p.add_argument("--seed", type=int, default=0, help="Seed for the extension probe")
    p.set_defaults(handler=cmd_classify_relation)

    p = sub.add_parser("table", parents=[common], help="Reproduce a class-relationship table")
    p.add_argument("which", choices=TABLE_IDS)
    p.add_argument("--format", choices=["csv", "markdown", "text", "json"], default="csv")
    p.add_argument("--alpha-decay", type=int, default=5, help="Truncations N = 1..K for the α* decay rows")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("sweep", parents=[common], help="Sweep rotations R_θ against n-cyclic monotonicity")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--grid", type=int, default=50)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="Run the verification suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200, help="Random cases per suite")
    p.add_argument("--suite", action="append", choices=SUITES, help="Run only this suite (repeatable)")
    p.add_argument("--inject-fault", action="store_true", help="Break the AND law to self-test the harness")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("figure", parents=[common], help="Class-membership regions as CSV or DOT")
    p.add_argument("setting", choices=FIGURE_SETTINGS)
    p.add_argument("--format", choices=["csv", "dot"], default="csv")
    p.set_defaults(handler=cmd_figure)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else log_level(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except (InputError, DimensionError, ArgumentError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MonoclassError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
