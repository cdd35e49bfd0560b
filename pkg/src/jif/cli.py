"""``jif`` command line: compute, series and validate."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import ingest
from .errors import JifError, UndefinedDenominator
from .ledger import CitationLedger
from .metrics import MAX_PRECISION, Method, as_decimal, compute
from .report import (
    FORMATS,
    ReportRow,
    YearReport,
    render_time_series,
    render_year_report,
    time_series,
    year_report,
)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2
EXIT_UNDEFINED = 3


class _UsageError(Exception):
    pass


class _DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid precision {text!r}") from None
    if not 0 <= value <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be in [0, {MAX_PRECISION}]")
    return value


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--journal", type=Path, help="journal JSON document")
    p.add_argument("--publications", type=Path, help="CSV with header year,articles")
    p.add_argument("--citations", type=Path, help="CSV with header cite_year,pub_year,count")
    p.add_argument("--name", help="journal name for CSV input (default: publications file stem)")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--precision", type=_precision, default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jif", description="Journal impact factors from citation ledgers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="impact factors for one target year")
    _add_source(p)
    p.add_argument("--year", type=int, required=True)
    p.add_argument("--method", choices=["all", *(m.value for m in Method)], default="all")
    _add_output(p)

    p = sub.add_parser("series", help="one method over a range of years")
    _add_source(p)
    p.add_argument("--method", choices=[m.value for m in Method], required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    _add_output(p)

    p = sub.add_parser("validate", help="check input files and summarize")
    _add_source(p)
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _DataError(f"{path}: {exc.strerror or exc}") from None


def load_ledger(args) -> CitationLedger:
    csv_given = args.publications is not None or args.citations is not None
    if args.journal is not None:
        if csv_given or args.name is not None:
            raise _UsageError("--journal cannot be combined with --publications/--citations/--name")
        return ingest.parse_journal_json(_read(args.journal))
    if args.publications is None or args.citations is None:
        raise _UsageError("give --journal, or both --publications and --citations")
    name = args.name if args.name is not None else args.publications.stem
    return ingest.load_csv(_read(args.publications), _read(args.citations), name)


def _compute(args, out) -> int:
    ledger = load_ledger(args)
    if args.method == "all":
        out.write(render_year_report(year_report(ledger, args.year, args.precision), args.format))
        return EXIT_OK
    method = Method(args.method)
    value = compute(ledger, method, args.year)
    row = ReportRow(method, value, as_decimal(value, args.precision))
    out.write(render_year_report(YearReport(ledger.journal_name, args.year, (row,)), args.format))
    return EXIT_OK


def _series(args, out) -> int:
    ledger = load_ledger(args)
    series = time_series(ledger, Method(args.method), args.start, args.stop)
    out.write(render_time_series(series, ledger.journal_name, args.format, args.precision))
    return EXIT_OK


def _validate(args, out) -> int:
    ledger = load_ledger(args)
    received = sum(ledger.citations.values())
    out.write(
        f"ok: {ledger.journal_name or 'journal'} {ledger.start_year}-{ledger.last_year}, "
        f"{sum(ledger.publications.values())} articles, "
        f"{len(ledger.citations)} citation cells, {received} citations\n"
    )
    return EXIT_OK


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    """Run the command line and return the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {"compute": _compute, "series": _series, "validate": _validate}[args.command]
        return handler(args, out)
    except _UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UndefinedDenominator as exc:
        err.write(f"undefined: denominator is zero ({exc.method.value}, {exc.target_year})\n")
        return EXIT_UNDEFINED
    except (JifError, _DataError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run_cli())
