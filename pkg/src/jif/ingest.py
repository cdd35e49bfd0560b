"""Reading and writing journal records.

Two interchange formats are supported:

* a pair of long-form CSV files, ``year,articles`` and
  ``cite_year,pub_year,count``;
* a single JSON document with the fields ``journal``, ``start_year``,
  ``publications`` and ``citations``.

Parsers are strict: headers and field sets must match exactly, and every
failure is raised as a :class:`~jif.errors.ParseError` that names the file
kind and the line (CSV) or field path (JSON) at fault.
"""

from __future__ import annotations

import csv
import io
import json
import re

from .errors import LedgerError, ParseError
from .ledger import CitationLedger, build_ledger

PUBLICATIONS_CSV = "publications-csv"
CITATIONS_CSV = "citations-csv"
JOURNAL_JSON = "journal-json"

PUBLICATIONS_HEADER = ("year", "articles")
CITATIONS_HEADER = ("cite_year", "pub_year", "count")
JOURNAL_FIELDS = ("journal", "start_year", "publications", "citations")

_INT = re.compile(r"-?[0-9]+")


def _csv_rows(text: str, file_kind: str, header: tuple[str, ...]):
    """Yield ``(line_number, fields)`` for each data row after checking the header."""
    text = text.removeprefix("\ufeff")
    rows = csv.reader(io.StringIO(text, newline=""))
    try:
        first = next(rows)
    except StopIteration:
        raise ParseError(file_kind, 1, "MissingHeader", "empty file") from None
    if tuple(first) != header:
        raise ParseError(
            file_kind, 1, "MissingHeader", f"expected {','.join(header)!r}, got {','.join(first)!r}"
        )
    for fields in rows:
        if not fields:
            continue
        if len(fields) != len(header):
            raise ParseError(
                file_kind, rows.line_num, "MalformedRow",
                f"expected {len(header)} fields, got {len(fields)}",
            )
        yield rows.line_num, fields


def _year(field: str, file_kind: str, line: int, name: str) -> int:
    if not _INT.fullmatch(field):
        raise ParseError(file_kind, line, "MalformedRow", f"{name} {field!r} is not an integer")
    return int(field)


def _count(field: str, file_kind: str, line: int, name: str) -> int:
    if not _INT.fullmatch(field):
        raise ParseError(file_kind, line, "NonIntegerCount", f"{name} {field!r} is not an integer")
    value = int(field)
    if value < 0:
        raise ParseError(file_kind, line, "NegativeCount", f"{name} {value} is negative")
    return value


def _publication_rows(text: str) -> list[tuple[int, tuple[int, int]]]:
    out = []
    for line, (year, articles) in _csv_rows(text, PUBLICATIONS_CSV, PUBLICATIONS_HEADER):
        out.append((line, (
            _year(year, PUBLICATIONS_CSV, line, "year"),
            _count(articles, PUBLICATIONS_CSV, line, "articles"),
        )))
    return out


def _citation_rows(text: str) -> list[tuple[int, tuple[int, int, int]]]:
    out = []
    for line, (cite_year, pub_year, count) in _csv_rows(text, CITATIONS_CSV, CITATIONS_HEADER):
        out.append((line, (
            _year(cite_year, CITATIONS_CSV, line, "cite_year"),
            _year(pub_year, CITATIONS_CSV, line, "pub_year"),
            _count(count, CITATIONS_CSV, line, "count"),
        )))
    return out


def parse_publications_csv(text: str) -> list[tuple[int, int]]:
    """Parse a ``year,articles`` file into ``(year, articles)`` rows, in file order."""
    return [row for _, row in _publication_rows(text)]


def parse_citations_csv(text: str) -> list[tuple[int, int, int]]:
    """Parse a ``cite_year,pub_year,count`` file into rows, in file order."""
    return [row for _, row in _citation_rows(text)]


def load_csv(publications_text: str, citations_text: str, journal_name: str = "") -> CitationLedger:
    """Build a ledger from the two CSV files; the start year is the earliest publication year."""
    pubs = _publication_rows(publications_text)
    cells = _citation_rows(citations_text)
    if not pubs:
        raise ParseError(PUBLICATIONS_CSV, 1, "PublicationGap", "no publication rows")
    start_year = min(year for _, (year, _) in pubs)
    try:
        return build_ledger(journal_name, start_year, [r for _, r in pubs], [r for _, r in cells])
    except LedgerError as exc:
        if exc.entry is None:
            line = next(line for line, (year, _) in pubs if year == start_year)
            raise ParseError(PUBLICATIONS_CSV, line, exc.kind, str(exc)) from exc
        section, index = exc.entry
        if section == "publications":
            raise ParseError(PUBLICATIONS_CSV, pubs[index][0], exc.kind, str(exc)) from exc
        raise ParseError(CITATIONS_CSV, cells[index][0], exc.kind, str(exc)) from exc


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _record(item, path: str, fields: tuple[str, ...], count_field: str) -> tuple[int, ...]:
    if not isinstance(item, dict):
        raise ParseError(JOURNAL_JSON, path, "MalformedRow", "expected an object")
    for key in item:
        if key not in fields:
            raise ParseError(JOURNAL_JSON, f"{path}.{key}", "UnknownField")
    values = []
    for key in fields:
        if key not in item:
            raise ParseError(JOURNAL_JSON, f"{path}.{key}", "MalformedRow", "missing field")
        value = item[key]
        if not _is_int(value):
            reason = "NonIntegerCount" if key == count_field else "MalformedRow"
            raise ParseError(JOURNAL_JSON, f"{path}.{key}", reason, f"{value!r} is not an integer")
        if key == count_field and value < 0:
            raise ParseError(JOURNAL_JSON, f"{path}.{key}", "NegativeCount", f"{value} is negative")
        values.append(value)
    return tuple(values)


def parse_journal_json(text: str) -> CitationLedger:
    """Parse a journal document and build its ledger."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(JOURNAL_JSON, "$", "MalformedRow", str(exc)) from None
    if not isinstance(doc, dict):
        raise ParseError(JOURNAL_JSON, "$", "MalformedRow", "top level must be an object")
    for key in doc:
        if key not in JOURNAL_FIELDS:
            raise ParseError(JOURNAL_JSON, key, "UnknownField")
    for key in JOURNAL_FIELDS:
        if key not in doc:
            raise ParseError(JOURNAL_JSON, key, "MalformedRow", "missing field")

    name = doc["journal"]
    if not isinstance(name, str):
        raise ParseError(JOURNAL_JSON, "journal", "MalformedRow", "expected a string")
    start_year = doc["start_year"]
    if not _is_int(start_year):
        raise ParseError(JOURNAL_JSON, "start_year", "MalformedRow", "expected an integer")
    for key in ("publications", "citations"):
        if not isinstance(doc[key], list):
            raise ParseError(JOURNAL_JSON, key, "MalformedRow", "expected an array")

    pubs = [
        _record(item, f"publications[{i}]", PUBLICATIONS_HEADER, "articles")
        for i, item in enumerate(doc["publications"])
    ]
    cells = [
        _record(item, f"citations[{i}]", CITATIONS_HEADER, "count")
        for i, item in enumerate(doc["citations"])
    ]
    try:
        return build_ledger(name, start_year, pubs, cells)
    except LedgerError as exc:
        if exc.entry is not None:
            path = f"{exc.entry[0]}[{exc.entry[1]}]"
        else:
            path = "publications" if exc.kind == "PublicationGap" else "start_year"
        raise ParseError(JOURNAL_JSON, path, exc.kind, str(exc)) from exc


def write_journal_json(ledger: CitationLedger) -> str:
    """Serialize ``ledger`` as a canonical journal document.

    Publications are ascending by year, citations ascending by
    ``(cite_year, pub_year)`` with zero cells left out. The output depends
    only on the ledger contents.
    """
    def block(key, items):
        if not items:
            return f'  "{key}": []'
        body = ",\n".join("    " + json.dumps(item, ensure_ascii=False) for item in items)
        return f'  "{key}": [\n{body}\n  ]'

    pubs = [{"year": y, "articles": n} for y, n in sorted(ledger.publications.items())]
    cells = [
        {"cite_year": y, "pub_year": k, "count": c}
        for (y, k), c in sorted(ledger.citations.items())
        if c
    ]
    lines = [
        "{",
        f'  "journal": {json.dumps(ledger.journal_name, ensure_ascii=False)},',
        f'  "start_year": {ledger.start_year},',
        block("publications", pubs) + ",",
        block("citations", cells),
        "}",
    ]
    return "\n".join(lines) + "\n"


def write_publications_csv(ledger: CitationLedger) -> str:
    rows = [",".join(PUBLICATIONS_HEADER)]
    rows += [f"{y},{n}" for y, n in sorted(ledger.publications.items())]
    return "\n".join(rows) + "\n"


def write_citations_csv(ledger: CitationLedger) -> str:
    rows = [",".join(CITATIONS_HEADER)]
    rows += [f"{y},{k},{c}" for (y, k), c in sorted(ledger.citations.items()) if c]
    return "\n".join(rows) + "\n"
