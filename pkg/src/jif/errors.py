"""Exception hierarchy shared by the ledger, metrics, ingest and report layers."""

from __future__ import annotations


class JifError(Exception):
    """Base class for every error raised by this package."""

    kind = "Error"


class LedgerError(JifError, ValueError):
    """A journal record violates a ledger invariant.

    ``entry`` locates the offending input item as ``(section, index)``, where
    section is ``"publications"`` or ``"citations"`` and index is the 0-based
    position in the list handed to :func:`jif.ledger.build_ledger`. It is
    ``None`` when the problem is not attributable to a single item.
    """

    def __init__(self, message: str, entry: tuple[str, int] | None = None):
        super().__init__(message)
        self.entry = entry


class DuplicatePublicationYear(LedgerError):
    kind = "DuplicatePublicationYear"


class PublicationGap(LedgerError):
    kind = "PublicationGap"


class DuplicateCitationPair(LedgerError):
    kind = "DuplicateCitationPair"


class FuturePublication(LedgerError):
    kind = "FuturePublication"


class OutOfRange(LedgerError):
    kind = "OutOfRange"


class NegativeCount(LedgerError):
    kind = "NegativeCount"


class UndefinedDenominator(JifError, ArithmeticError):
    """The article count in a metric's window sums to zero."""

    kind = "UndefinedDenominator"

    def __init__(self, method, target_year: int):
        super().__init__(
            f"{method.label} impact factor for {target_year} is undefined: denominator is zero"
        )
        self.method = method
        self.target_year = target_year


class PrecisionOutOfRange(JifError, ValueError):
    kind = "PrecisionOutOfRange"


class EmptyRange(JifError, ValueError):
    kind = "EmptyRange"


class ParseError(JifError, ValueError):
    """Malformed input file, with a location usable in diagnostics.

    ``location`` is a 1-based line number for CSV input and a field path such
    as ``"citations[3].count"`` for JSON documents.
    """

    kind = "ParseError"

    def __init__(self, file_kind: str, location: int | str, reason: str, detail: str = ""):
        self.file_kind = file_kind
        self.location = location
        self.reason = reason
        self.detail = detail
        where = f"line {location}" if isinstance(location, int) else location
        msg = f"{file_kind}: {where}: {reason}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
