"""The four impact-factor variants, their accuracy ranking, and decimal rendering.

Every value is computed with integer sums and kept as an exact fraction in
lowest terms. Rounding only happens in :func:`as_decimal`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import OutOfRange, PrecisionOutOfRange, UndefinedDenominator
from .ledger import CitationLedger, cites, citations_during, published

MAX_PRECISION = 12


class Method(enum.Enum):
    """Impact-factor variant. Declaration order is accuracy order, best first."""

    TOTAL = "total"
    EXTENDED = "extended"
    IMPROVED = "improved"
    GARFIELD = "garfield"

    @property
    def accuracy_rank(self) -> int:
        return _RANK[self]

    @property
    def label(self) -> str:
        return self.name.capitalize()

    @classmethod
    def ranked(cls) -> list[Method]:
        return sorted(cls, key=lambda m: m.accuracy_rank)

    @classmethod
    def parse(cls, text: str) -> Method:
        try:
            return cls(text.strip().lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {text!r} (choose from {choices})") from None


_RANK = {m: i for i, m in enumerate(Method)}


@dataclass(frozen=True)
class ImpactFactor:
    """An exact impact-factor value ``numerator / denominator`` in lowest terms."""

    method: Method
    target_year: int
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if self.numerator < 0:
            raise ValueError("numerator must be non-negative")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError(f"{self.numerator}/{self.denominator} is not in lowest terms")

    @classmethod
    def from_sums(cls, method: Method, target_year: int, citations: int, articles: int):
        if articles == 0:
            raise UndefinedDenominator(method, target_year)
        frac = Fraction(citations, articles)
        return cls(method, target_year, frac.numerator, frac.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class Undefined:
    """Placeholder for a metric whose article count is zero."""

    method: Method
    target_year: int

    def __str__(self) -> str:
        return "undefined"


def _require_target(ledger: CitationLedger, y2: int) -> None:
    if not ledger.start_year <= y2 <= ledger.last_year:
        raise OutOfRange(
            f"target year {y2} outside ledger span [{ledger.start_year}, {ledger.last_year}]"
        )


def window_sums(ledger: CitationLedger, method: Method, y2: int) -> tuple[int, int]:
    """Unreduced ``(citations, articles)`` sums for ``method`` at target year ``y2``.

    Years before the journal's start contribute zero to both sums.
    """
    _require_target(ledger, y2)
    if method is Method.GARFIELD:
        window = (y2 - 1, y2 - 2)
    elif method is Method.IMPROVED:
        window = (y2, y2 - 1, y2 - 2)
    else:
        window = range(ledger.start_year, y2 + 1)
    articles = sum(published(ledger, k) for k in window)

    if method is Method.TOTAL:
        received = sum(citations_during(ledger, k) for k in window)
    else:
        received = sum(cites(ledger, y2, k) for k in window)
    return received, articles


def compute(ledger: CitationLedger, method: Method, y2: int) -> ImpactFactor:
    received, articles = window_sums(ledger, method, y2)
    return ImpactFactor.from_sums(method, y2, received, articles)


def garfield(ledger: CitationLedger, y2: int) -> ImpactFactor:
    """Two-year window: citations in ``y2`` to the two preceding cohorts."""
    return compute(ledger, Method.GARFIELD, y2)


def improved(ledger: CitationLedger, y2: int) -> ImpactFactor:
    """Garfield's window plus the ``y2`` cohort and its same-year citations."""
    return compute(ledger, Method.IMPROVED, y2)


def extended(ledger: CitationLedger, y2: int) -> ImpactFactor:
    """Citations during ``y2`` to every cohort since the start year."""
    return compute(ledger, Method.EXTENDED, y2)


def total(ledger: CitationLedger, y2: int) -> ImpactFactor:
    """Every citation received up to and including ``y2``, over every article."""
    return compute(ledger, Method.TOTAL, y2)


def compute_all(ledger: CitationLedger, y2: int) -> list[tuple[Method, ImpactFactor | Undefined]]:
    """All four methods at ``y2``, best-ranked first.

    A zero denominator yields an :class:`Undefined` entry instead of raising.
    """
    _require_target(ledger, y2)
    out = []
    for method in Method.ranked():
        try:
            out.append((method, compute(ledger, method, y2)))
        except UndefinedDenominator:
            out.append((method, Undefined(method, y2)))
    return out


def check_precision(precision: int) -> None:
    if isinstance(precision, bool) or not isinstance(precision, int) or not (
        0 <= precision <= MAX_PRECISION
    ):
        raise PrecisionOutOfRange(f"precision must be an integer in [0, {MAX_PRECISION}]")


def as_decimal(value, precision: int = 3) -> str:
    """Render ``value`` with exactly ``precision`` fractional digits.

    Ties round away from zero. ``value`` may be an :class:`ImpactFactor` or
    anything exposing integer ``numerator``/``denominator`` (e.g. ``Fraction``).
    """
    check_precision(precision)
    num, den = value.numerator, value.denominator
    sign = "-" if (num < 0) != (den < 0) and num != 0 else ""
    num, den = abs(num), abs(den)
    scale = 10**precision
    q, r = divmod(num * scale, den)
    if 2 * r >= den:
        q += 1
    whole, frac = divmod(q, scale)
    if precision == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{precision}d}"
