import json
import random

import pytest
from hypothesis import given

from conftest import DATA, ledgers
from jif import (
    ParseError,
    build_ledger,
    load_csv,
    parse_citations_csv,
    parse_journal_json,
    parse_publications_csv,
    write_citations_csv,
    write_journal_json,
    write_publications_csv,
)

PUBS = "year,articles\n2015,20\n2016,40\n2017,50\n2018,45\n2019,40"


def test_parse_publications():
    assert parse_publications_csv(PUBS) == [(2015, 20), (2016, 40), (2017, 50), (2018, 45), (2019, 40)]
    assert parse_publications_csv("year,articles\n") == []
    assert parse_publications_csv("year,articles\r\n2015,1\r\n\r\n") == [(2015, 1)]


def test_parse_citations():
    text = "cite_year,pub_year,count\n2019,2017,55\n2018,2017,70"
    assert parse_citations_csv(text) == [(2019, 2017, 55), (2018, 2017, 70)]
    assert parse_citations_csv("cite_year,pub_year,count\n") == []
    assert parse_citations_csv("cite_year,pub_year,count\n2019,2017,0") == [(2019, 2017, 0)]


@pytest.mark.parametrize(
    "text, line, reason",
    [
        ("year,articles\n2015,-3", 2, "NegativeCount"),
        ("year,articles\n2015,20\n2016,many", 3, "NonIntegerCount"),
        ("year,articles\n2015,2.5", 2, "NonIntegerCount"),
        ("year,articles\n2015, 20", 2, "NonIntegerCount"),
        ("year,articles\nMMXV,20", 2, "MalformedRow"),
        ("year,articles\n2015", 2, "MalformedRow"),
        ("year,articles\n2015,1,2", 2, "MalformedRow"),
        ("year,count\n2015,20", 1, "MissingHeader"),
        ("2015,20\n", 1, "MissingHeader"),
        ("", 1, "MissingHeader"),
    ],
)
def test_publications_errors(text, line, reason):
    with pytest.raises(ParseError) as info:
        parse_publications_csv(text)
    err = info.value
    assert (err.file_kind, err.location, err.reason) == ("publications-csv", line, reason)


def test_citations_error_location():
    with pytest.raises(ParseError) as info:
        parse_citations_csv("cite_year,pub_year,count\n2019,2017,fifty")
    assert (info.value.location, info.value.reason) == (2, "NonIntegerCount")
    assert "line 2" in str(info.value)


def test_csv_fixture_matches_hand_built(example_ledger):
    ledger = load_csv((DATA / "pubs.csv").read_text(), (DATA / "cites.csv").read_text(), "J")
    assert ledger == example_ledger


@pytest.mark.parametrize(
    "pubs, cites, file_kind, line, reason",
    [
        (PUBS, "cite_year,pub_year,count\n2019,2017,5\n2017,2018,5", "citations-csv", 3, "FuturePublication"),
        (PUBS, "cite_year,pub_year,count\n2019,2017,5\n2019,2017,6", "citations-csv", 3, "DuplicateCitationPair"),
        (PUBS, "cite_year,pub_year,count\n2020,2017,5", "citations-csv", 2, "OutOfRange"),
        ("year,articles\n2015,1\n2015,2", "cite_year,pub_year,count\n", "publications-csv", 3, "DuplicatePublicationYear"),
        ("year,articles\n2015,1\n2017,2", "cite_year,pub_year,count\n", "publications-csv", 2, "PublicationGap"),
        ("year,articles\n", "cite_year,pub_year,count\n", "publications-csv", 1, "PublicationGap"),
        ("year,articles\n\n900,1", "cite_year,pub_year,count\n", "publications-csv", 3, "OutOfRange"),
    ],
)
def test_load_csv_ledger_errors_located(pubs, cites, file_kind, line, reason):
    with pytest.raises(ParseError) as info:
        load_csv(pubs, cites)
    err = info.value
    assert (err.file_kind, err.location, err.reason) == (file_kind, line, reason)


def test_csv_order_independent(example_ledger, example_rows):
    _, pubs, cells = example_rows
    rng = random.Random(7)
    for _ in range(5):
        rng.shuffle(cells)
        rng.shuffle(pubs)
        ptext = "year,articles\n" + "".join(f"{y},{n}\n" for y, n in pubs)
        ctext = "cite_year,pub_year,count\n" + "".join(f"{y},{k},{c}\n" for y, k, c in cells)
        assert load_csv(ptext, ctext, "J") == example_ledger


def test_csv_writers_round_trip(example_ledger):
    again = load_csv(write_publications_csv(example_ledger), write_citations_csv(example_ledger), "J")
    assert again == example_ledger


def test_json_fixture(example_ledger):
    assert parse_journal_json((DATA / "journal.json").read_text()) == example_ledger


def _doc(**overrides):
    doc = {
        "journal": "J",
        "start_year": 2015,
        "publications": [{"year": 2015, "articles": 20}, {"year": 2016, "articles": 40}],
        "citations": [{"cite_year": 2016, "pub_year": 2015, "count": 15}],
    }
    doc.update(overrides)
    return json.dumps(doc)


def test_json_empty_citations():
    ledger = parse_journal_json(_doc(citations=[]))
    assert dict(ledger.citations) == {}


@pytest.mark.parametrize(
    "text, path, reason",
    [
        (_doc(issn="1234-5678"), "issn", "UnknownField"),
        (_doc(publications=[{"year": 2015, "articles": 20, "pages": 3}]), "publications[0].pages", "UnknownField"),
        (_doc(publications=[{"year": 2015}]), "publications[0].articles", "MalformedRow"),
        (_doc(publications=[{"year": "2015", "articles": 1}]), "publications[0].year", "MalformedRow"),
        (_doc(citations=[{"cite_year": 2016, "pub_year": 2015, "count": 1.5}]), "citations[0].count", "NonIntegerCount"),
        (_doc(citations=[{"cite_year": 2016, "pub_year": 2015, "count": -1}]), "citations[0].count", "NegativeCount"),
        (_doc(citations=[{"cite_year": 2015, "pub_year": 2016, "count": 1}]), "citations[0]", "FuturePublication"),
        (_doc(citations=[[2016, 2015, 1]]), "citations[0]", "MalformedRow"),
        (_doc(citations={}), "citations", "MalformedRow"),
        (_doc(start_year=2014), "publications", "PublicationGap"),
        (_doc(start_year=True), "start_year", "MalformedRow"),
        (_doc(journal=5), "journal", "MalformedRow"),
        (json.dumps({"journal": "J", "start_year": 2015, "publications": []}), "citations", "MalformedRow"),
        ("[]", "$", "MalformedRow"),
        ("{not json", "$", "MalformedRow"),
    ],
)
def test_json_errors(text, path, reason):
    with pytest.raises(ParseError) as info:
        parse_journal_json(text)
    err = info.value
    assert (err.file_kind, err.location, err.reason) == ("journal-json", path, reason)


def test_write_canonical(example_ledger):
    text = write_journal_json(example_ledger)
    doc = json.loads(text)
    assert list(doc) == ["journal", "start_year", "publications", "citations"]
    assert [p["year"] for p in doc["publications"]] == [2015, 2016, 2017, 2018, 2019]
    keys = [(c["cite_year"], c["pub_year"]) for c in doc["citations"]]
    assert keys == sorted(keys)
    assert all(c["count"] > 0 for c in doc["citations"])
    assert text.endswith("}\n") and "\r" not in text
    assert write_journal_json(parse_journal_json(text)) == text


def test_write_empty_citations():
    ledger = build_ledger("x", 2015, [(2015, 1)])
    doc = json.loads(write_journal_json(ledger))
    assert doc["citations"] == []


@given(ledgers())
def test_json_round_trip(ledger):
    text = write_journal_json(ledger)
    assert parse_journal_json(text) == ledger
    assert write_journal_json(parse_journal_json(text)) == text
