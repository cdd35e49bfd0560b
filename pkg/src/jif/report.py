"""Single-year reports, per-method time series, and their text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import EmptyRange, OutOfRange, UndefinedDenominator
from .ledger import CitationLedger
from .metrics import ImpactFactor, Method, Undefined, as_decimal, check_precision, compute, compute_all

UNDEFINED = "undefined"
FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class ReportRow:
    method: Method
    value: ImpactFactor | Undefined
    decimal: str


@dataclass(frozen=True)
class YearReport:
    journal_name: str
    target_year: int
    rows: tuple[ReportRow, ...]


@dataclass(frozen=True)
class TimeSeries:
    method: Method
    points: tuple[tuple[int, ImpactFactor | Undefined], ...]

    @property
    def years(self) -> list[int]:
        return [year for year, _ in self.points]


def _decimal(value, precision: int) -> str:
    if isinstance(value, Undefined):
        return UNDEFINED
    return as_decimal(value, precision)


def year_report(ledger: CitationLedger, y2: int, precision: int = 3) -> YearReport:
    """All four methods at ``y2`` in accuracy order, with rendered decimals."""
    check_precision(precision)
    rows = tuple(
        ReportRow(method, value, _decimal(value, precision))
        for method, value in compute_all(ledger, y2)
    )
    return YearReport(ledger.journal_name, y2, rows)


def time_series(ledger: CitationLedger, method: Method, start: int, stop: int) -> TimeSeries:
    """Evaluate ``method`` for every year in ``[start, stop]``, keeping undefined years."""
    if start > stop:
        raise EmptyRange(f"empty year range {start}..{stop}")
    for year in (start, stop):
        if not ledger.start_year <= year <= ledger.last_year:
            raise OutOfRange(
                f"year {year} outside ledger span [{ledger.start_year}, {ledger.last_year}]"
            )
    points = []
    for year in range(start, stop + 1):
        try:
            points.append((year, compute(ledger, method, year)))
        except UndefinedDenominator:
            points.append((year, Undefined(method, year)))
    return TimeSeries(method, tuple(points))


def _json_row(key: str, label, value, decimal: str) -> dict:
    row = {key: label}
    if isinstance(value, Undefined):
        row["undefined"] = True
    else:
        row["numerator"] = value.numerator
        row["denominator"] = value.denominator
    row["decimal"] = decimal
    return row


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fraction_fields(value) -> list:
    if isinstance(value, Undefined):
        return ["", ""]
    return [value.numerator, value.denominator]


def _table(title: str, header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]

    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [title, line(header), line(["-" * w for w in widths])]
    out += [line(r) for r in rows]
    return "\n".join(out) + "\n"


def render_year_report(report: YearReport, fmt: str = "table") -> str:
    if fmt == "json":
        doc = {
            "journal": report.journal_name,
            "year": report.target_year,
            "rows": [_json_row("method", r.method.value, r.value, r.decimal) for r in report.rows],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv_text(
            ["method", "numerator", "denominator", "decimal"],
            [[r.method.value, *_fraction_fields(r.value), r.decimal] for r in report.rows],
        )
    if fmt == "table":
        title = f"{report.journal_name or 'journal'}: impact factors for {report.target_year}"
        rows = [[r.method.label, str(r.value), r.decimal] for r in report.rows]
        return _table(title, ["method", "fraction", "decimal"], rows)
    raise ValueError(f"unknown format {fmt!r}")


def render_time_series(
    series: TimeSeries, journal_name: str = "", fmt: str = "table", precision: int = 3
) -> str:
    if fmt == "json":
        doc = {
            "journal": journal_name,
            "method": series.method.value,
            "points": [_json_row("year", y, v, _decimal(v, precision)) for y, v in series.points],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv_text(
            ["year", "numerator", "denominator", "decimal"],
            [[y, *_fraction_fields(v), _decimal(v, precision)] for y, v in series.points],
        )
    if fmt == "table":
        title = f"{journal_name or 'journal'}: {series.method.label} impact factor by year"
        rows = [[str(y), str(v), _decimal(v, precision)] for y, v in series.points]
        return _table(title, ["year", "fraction", "decimal"], rows)
    raise ValueError(f"unknown format {fmt!r}")
