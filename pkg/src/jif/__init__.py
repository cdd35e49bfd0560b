"""Exact journal impact factors: Garfield, Improved, Extended and Total."""

from .errors import (
    DuplicateCitationPair,
    DuplicatePublicationYear,
    EmptyRange,
    FuturePublication,
    JifError,
    LedgerError,
    NegativeCount,
    OutOfRange,
    ParseError,
    PrecisionOutOfRange,
    PublicationGap,
    UndefinedDenominator,
)
from .ingest import (
    load_csv,
    parse_citations_csv,
    parse_journal_json,
    parse_publications_csv,
    write_citations_csv,
    write_journal_json,
    write_publications_csv,
)
from .ledger import (
    CitationLedger,
    build_ledger,
    citations_during,
    cites,
    cohort_total,
    flatten,
    published,
)
from .metrics import (
    ImpactFactor,
    Method,
    Undefined,
    as_decimal,
    compute,
    compute_all,
    extended,
    garfield,
    improved,
    total,
    window_sums,
)
from .report import TimeSeries, YearReport, render_time_series, render_year_report, time_series, year_report
from .samples import example_journal

__version__ = "0.1.0"
