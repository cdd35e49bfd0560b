"""Journal publication/citation record.

A :class:`CitationLedger` holds, for one journal, the number of articles
published each year ``P(k)`` and the citation matrix ``C(y, k)``: citations
received during year ``y`` by the articles published in year ``k``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import (
    DuplicateCitationPair,
    DuplicatePublicationYear,
    FuturePublication,
    NegativeCount,
    OutOfRange,
    PublicationGap,
)

MIN_YEAR = 1000
MAX_YEAR = 3000


@dataclass(frozen=True, eq=True)
class CitationLedger:
    """Immutable journal record. Build instances with :func:`build_ledger`.

    ``citations`` only stores nonzero cells, so an explicit zero and an
    absent pair compare equal.
    """

    journal_name: str
    start_year: int
    last_year: int
    publications: Mapping[int, int]
    citations: Mapping[tuple[int, int], int]

    __hash__ = None  # mapping fields are not hashable

    @property
    def years(self) -> range:
        return range(self.start_year, self.last_year + 1)

    def published(self, k: int) -> int:
        return published(self, k)

    def cites(self, cite_year: int, pub_year: int) -> int:
        return cites(self, cite_year, pub_year)


def _check_year(year, what: str, entry) -> None:
    _check_int(year, what)
    if not MIN_YEAR <= year <= MAX_YEAR:
        raise OutOfRange(f"{what} {year} outside sanity bounds [{MIN_YEAR}, {MAX_YEAR}]", entry)


def _check_int(value, what: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an int, got {type(value).__name__}")


def _check_count(value, what: str, entry) -> None:
    _check_int(value, what)
    if value < 0:
        raise NegativeCount(f"{what} must be non-negative, got {value}", entry)


def build_ledger(
    journal_name: str,
    start_year: int,
    publications: Iterable[tuple[int, int]],
    citations: Iterable[tuple[int, int, int]] = (),
) -> CitationLedger:
    """Validate raw counts and assemble a :class:`CitationLedger`.

    ``publications`` must list every year from ``start_year`` up to the last
    publication year exactly once; a year with no articles is given as
    ``(year, 0)``. ``citations`` is a sparse list of
    ``(cite_year, pub_year, count)``; unlisted pairs read as zero.
    """
    _check_year(start_year, "start year", None)

    pubs: dict[int, int] = {}
    for i, (year, articles) in enumerate(publications):
        entry = ("publications", i)
        _check_year(year, "publication year", entry)
        _check_count(articles, f"article count for {year}", entry)
        if year < start_year:
            raise OutOfRange(f"publication year {year} precedes start year {start_year}", entry)
        if year in pubs:
            raise DuplicatePublicationYear(f"publication year {year} listed twice", entry)
        pubs[year] = articles

    if start_year not in pubs:
        raise PublicationGap(f"no publication entry for start year {start_year}")
    last_year = max(pubs)
    missing = [y for y in range(start_year, last_year + 1) if y not in pubs]
    if missing:
        raise PublicationGap(
            "no publication entry for year(s) " + ", ".join(map(str, missing))
        )

    cells: dict[tuple[int, int], int] = {}
    seen: set[tuple[int, int]] = set()
    for i, (cite_year, pub_year, count) in enumerate(citations):
        entry = ("citations", i)
        _check_year(cite_year, "citing year", entry)
        _check_year(pub_year, "publication year", entry)
        _check_count(count, f"citation count for ({cite_year}, {pub_year})", entry)
        if pub_year > cite_year:
            raise FuturePublication(
                f"articles from {pub_year} cannot be cited during {cite_year}", entry
            )
        if pub_year < start_year or cite_year > last_year:
            raise OutOfRange(
                f"citation pair ({cite_year}, {pub_year}) outside [{start_year}, {last_year}]",
                entry,
            )
        key = (cite_year, pub_year)
        if key in seen:
            raise DuplicateCitationPair(f"citation pair {key} listed twice", entry)
        seen.add(key)
        if count:
            cells[key] = count

    return CitationLedger(
        journal_name=journal_name,
        start_year=start_year,
        last_year=last_year,
        publications=MappingProxyType(dict(sorted(pubs.items()))),
        citations=MappingProxyType(dict(sorted(cells.items()))),
    )


def published(ledger: CitationLedger, k: int) -> int:
    """Articles published in year ``k``; zero outside the ledger span."""
    return ledger.publications.get(k, 0)


def cites(ledger: CitationLedger, cite_year: int, pub_year: int) -> int:
    """Citations during ``cite_year`` to the ``pub_year`` cohort."""
    if pub_year > cite_year:
        raise FuturePublication(f"articles from {pub_year} cannot be cited during {cite_year}")
    return ledger.citations.get((cite_year, pub_year), 0)


def _require_in_span(ledger: CitationLedger, year: int) -> None:
    if not ledger.start_year <= year <= ledger.last_year:
        raise OutOfRange(
            f"year {year} outside ledger span [{ledger.start_year}, {ledger.last_year}]"
        )


def cohort_total(ledger: CitationLedger, pub_year: int) -> int:
    """All citations ever recorded for the articles published in ``pub_year``."""
    _require_in_span(ledger, pub_year)
    return sum(cites(ledger, y, pub_year) for y in range(pub_year, ledger.last_year + 1))


def citations_during(ledger: CitationLedger, y: int) -> int:
    """Citations received during year ``y`` by every cohort published up to ``y``."""
    _require_in_span(ledger, y)
    return sum(cites(ledger, y, k) for k in range(ledger.start_year, y + 1))


def flatten(ledger: CitationLedger) -> tuple[list[tuple[int, int]], list[tuple[int, int, int]]]:
    """Return ``(publications, citations)`` lists accepted by :func:`build_ledger`."""
    pubs = list(ledger.publications.items())
    cells = [(y, k, c) for (y, k), c in ledger.citations.items()]
    return pubs, cells
