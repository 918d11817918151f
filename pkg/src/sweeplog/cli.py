"""Batch command-line front end.

Four subcommands: ``adjust`` writes the coalesced log, ``aux`` writes the
fair-share table, ``metrics`` writes or prints an index report, and
``inject`` writes a log with synthetic overlap.  Diagnostics go to stderr;
data goes to files or stdout.  Exit codes: 0 success, 1 input or I/O
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .inject import inject
from .logio import (
    LogFormatError,
    format_timestamp,
    infer_format,
    read_csv,
    read_xes,
    report_to_dict,
    write_log,
    write_report,
)
from .metrics import summarize
from .model import EventLog, LogValidationError, round_half_up_ms
from .sweep import adjust_log, format_adjustment_table

AUX_COLUMNS = (
    "aux_id",
    "parent_id",
    "case_id",
    "activity",
    "resource",
    "start_timestamp",
    "end_timestamp",
    "duration_ms",
)


def _read_log(path: str, fmt: Optional[str]) -> EventLog:
    resolved = fmt or infer_format(path)
    if not Path(path).exists():
        raise LogFormatError(f"{path}: no such file")
    if resolved == "csv":
        return read_csv(path)
    if resolved == "xes":
        return read_xes(path)
    raise ValueError(f"unknown log format {resolved!r}, expected csv or xes")


def _out_format(path: str, fmt: Optional[str]) -> str:
    return fmt or infer_format(path)


def _cmd_adjust(args: argparse.Namespace) -> int:
    log = _read_log(args.input, args.format)
    if args.debug_table:
        print(format_adjustment_table(log), file=sys.stderr)
    adjusted = adjust_log(log)
    write_log(adjusted.coalesced, _out_format(args.out, args.format), args.out)
    return 0


def _cmd_aux(args: argparse.Namespace) -> int:
    log = _read_log(args.input, args.format)
    if args.debug_table:
        print(format_adjustment_table(log), file=sys.stderr)
    adjusted = adjust_log(log)
    parents = log.by_id()
    with open(args.out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(AUX_COLUMNS)
        for share in adjusted.aux_items:
            parent = parents[share.parent_id]
            writer.writerow(
                (
                    share.id,
                    share.parent_id,
                    parent.trace_id,
                    parent.activity,
                    parent.resource,
                    format_timestamp(share.start),
                    format_timestamp(share.end),
                    round_half_up_ms(share.duration),
                )
            )
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    log = _read_log(args.input, args.format)
    report = summarize(log)
    if args.report:
        write_report(report, args.report)
    else:
        print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    return 0


def _cmd_inject(args: argparse.Namespace) -> int:
    log = _read_log(args.input, args.format)
    shifted = inject(log, args.shift)
    write_log(shifted, _out_format(args.out, args.format), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sweeplog",
        description=(
            "Pre-process event logs for resource multitasking: fair-share "
            "time adjustment, multitasking indexes, synthetic overlap."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def add_common(sub: argparse.ArgumentParser, needs_out: bool) -> None:
        sub.add_argument("--in", dest="input", required=True, metavar="PATH",
                         help="input event log")
        if needs_out:
            sub.add_argument("--out", required=True, metavar="PATH",
                             help="output file")
        sub.add_argument("--format", choices=("csv", "xes"),
                         help="log format (default: from file extension)")

    adjust = commands.add_parser(
        "adjust", help="write the log with fair-share adjusted durations")
    add_common(adjust, needs_out=True)
    adjust.add_argument("--debug-table", action="store_true",
                        help="dump boundary points, intervals, and shares "
                             "to stderr")
    adjust.set_defaults(handler=_cmd_adjust)

    aux = commands.add_parser(
        "aux", help="write the fair-share table (one row per share)")
    add_common(aux, needs_out=True)
    aux.add_argument("--debug-table", action="store_true",
                     help="dump boundary points, intervals, and shares "
                          "to stderr")
    aux.set_defaults(handler=_cmd_aux)

    metrics = commands.add_parser(
        "metrics", help="compute multitasking indexes and counts")
    add_common(metrics, needs_out=False)
    metrics.add_argument("--report", metavar="PATH",
                         help="write the report here instead of stdout")
    metrics.set_defaults(handler=_cmd_metrics)

    injector = commands.add_parser(
        "inject", help="overlap adjacent items by a percentage")
    add_common(injector, needs_out=True)
    injector.add_argument("--shift", type=float, required=True,
                          metavar="FLOAT",
                          help="shift percentage in [0, 1]")
    injector.set_defaults(handler=_cmd_inject)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments and execute one subcommand; return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (LogFormatError, LogValidationError, ValueError, OSError) as exc:
        print(f"sweeplog: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
