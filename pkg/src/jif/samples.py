"""A small worked-example journal, handy for demos and tests."""

from __future__ import annotations

from .ledger import CitationLedger, build_ledger

EXAMPLE_PUBLICATIONS = [(2015, 20), (2016, 40), (2017, 50), (2018, 45), (2019, 40)]

# (cite_year, pub_year, count), listed cohort by cohort
EXAMPLE_CITATIONS = [
    (2015, 2015, 6), (2016, 2015, 15), (2017, 2015, 4), (2018, 2015, 0), (2019, 2015, 9),
    (2016, 2016, 19), (2017, 2016, 0), (2018, 2016, 8), (2019, 2016, 11),
    (2017, 2017, 10), (2018, 2017, 70), (2019, 2017, 55),
    (2018, 2018, 12), (2019, 2018, 16),
    (2019, 2019, 90),
]


def example_journal(name: str = "J") -> CitationLedger:
    """Five years (2015-2019) of publication and citation counts for one journal."""
    return build_ledger(name, 2015, EXAMPLE_PUBLICATIONS, EXAMPLE_CITATIONS)
