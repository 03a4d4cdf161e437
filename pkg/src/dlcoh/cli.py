"""
Command line interface.

    dlcoh table xnd -n 2 -d 2 --mu 1
    dlcoh table pi -n 3 --format csv
    dlcoh table block -n 3 -d 2 --core ""
    dlcoh verify triangle --max-n 8 --jobs 4
    dlcoh verify all --max-n 6

Exit codes: 0 success, 1 usage error, 2 a verification found a counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys

from .partitions import parse_partition
from .serialize import dump_json, table_to_csv, table_to_json
from .sweeps import SUITES, SweepConfig, run_verify
from .tables import block_table, conja_table, pi_variety_table

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _d_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(",")
    return int(lo), int(hi or lo)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dlcoh", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    table = sub.add_parser("table", help="emit a cohomology table")
    table.add_argument("kind", choices=("xnd", "pi", "block"))
    table.add_argument("-n", type=int, required=True)
    table.add_argument("-d", type=int)
    table.add_argument("--mu", default=None, help="comma separated parts, either order")
    table.add_argument("--core", default=None, help="starting partition of a block table")
    table.add_argument("--pad", type=int, default=None, help="beta-set padding (default d)")
    table.add_argument("--format", choices=("json", "csv"), default="json")

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument("suite", choices=(*SUITES, "all"))
    verify.add_argument("-n", "--max-n", dest="max_n", type=int, required=True)
    verify.add_argument("-d", "--d-range", dest="d_range", type=_d_range, default=None,
                        help="restrict d to lo,hi")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--pad", type=int, default=None)
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def cmd_table(args) -> str:
    if args.kind == "pi":
        table = pi_variety_table(args.n, args.pad)
    else:
        if args.d is None:
            raise UsageError(f"table {args.kind} needs -d")
        label = args.mu if args.kind == "xnd" else (args.core if args.core is not None else args.mu)
        if label is None:
            raise UsageError(f"table {args.kind} needs --{'mu' if args.kind == 'xnd' else 'core'}")
        mu = parse_partition(label)
        make = conja_table if args.kind == "xnd" else block_table
        table = make(args.n, args.d, mu, args.pad)
    return table_to_csv(table) if args.format == "csv" else table_to_json(table)


def _report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "status", "items", "checked", "failed_items"])
    for r in report["suites"]:
        writer.writerow([r["suite"], r["status"], r["items"], r["checked"], r["failed_items"]])
    return buf.getvalue()


def cmd_verify(args) -> tuple[str, int]:
    cfg = SweepConfig(max_n=args.max_n, d_range=args.d_range, jobs=args.jobs,
                      format=args.format, seed=args.seed, pad=args.pad)
    report = run_verify(args.suite, cfg)
    text = _report_csv(report) if cfg.format == "csv" else dump_json(report)
    if report["status"] != "pass" and cfg.format == "csv":
        sys.stderr.write(dump_json(report["witness"]))
    return text, EXIT_OK if report["status"] == "pass" else EXIT_COUNTEREXAMPLE


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        if args.command == "table":
            out, code = cmd_table(args), EXIT_OK
        else:
            out, code = cmd_verify(args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"dlcoh: error: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
