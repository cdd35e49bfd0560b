import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from jif import build_ledger, example_journal
from jif.samples import EXAMPLE_CITATIONS, EXAMPLE_PUBLICATIONS

DATA = Path(__file__).parent / "data"
MAX_COUNT = 10**6
MAX_SPAN = 15


@pytest.fixture
def example_ledger():
    return example_journal()


@pytest.fixture
def example_rows():
    return 2015, list(EXAMPLE_PUBLICATIONS), list(EXAMPLE_CITATIONS)


def random_rows(rng: random.Random):
    """Raw ``(start_year, publications, citations)`` for one random journal.

    Roughly one draw in five uses a sparse/zero-heavy regime so that zero
    denominators and empty matrices are exercised too.
    """
    start = rng.randint(1900, 2030)
    span = rng.randint(1, MAX_SPAN)
    sparse = rng.random() < 0.2

    def count():
        if sparse and rng.random() < 0.6:
            return 0
        return rng.randint(0, MAX_COUNT) if rng.random() < 0.5 else rng.randint(0, 50)

    pubs = [(y, count()) for y in range(start, start + span)]
    cells = [
        (y, k, count())
        for y in range(start, start + span)
        for k in range(start, y + 1)
        if rng.random() < 0.7
    ]
    rng.shuffle(pubs)
    rng.shuffle(cells)
    return start, pubs, cells


def random_corpus(n: int, seed: int = 20201011):
    rng = random.Random(seed)
    return [random_rows(rng) for _ in range(n)]


@st.composite
def ledger_rows(draw, max_span=MAX_SPAN, max_count=MAX_COUNT):
    span = draw(st.integers(1, max_span))
    start = draw(st.integers(1000, 3001 - span))
    counts = st.integers(0, max_count)
    pubs = [(y, draw(counts)) for y in range(start, start + span)]
    cells = []
    for y in range(start, start + span):
        for k in range(start, y + 1):
            if draw(st.booleans()):
                cells.append((y, k, draw(counts)))
    return start, pubs, cells


@st.composite
def ledgers(draw, **kwargs):
    start, pubs, cells = draw(ledger_rows(**kwargs))
    name = draw(st.text(max_size=12))
    return build_ledger(name, start, pubs, cells)


_ACCEPTANCE = []


def record_criterion(number: int, title: str, ok: bool):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
