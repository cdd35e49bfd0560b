# %% [markdown]
# # Reading journal files and using the `jif` command
#
# Journals can be stored as two CSV files or as one JSON document. Parsers
# are strict and report the line or field path of the first problem.

# %%
import subprocess
import sys
import tempfile
from pathlib import Path

from jif import ParseError, example_journal, load_csv, parse_journal_json
from jif import write_citations_csv, write_journal_json, write_publications_csv

journal = example_journal()
workdir = Path(tempfile.mkdtemp())
(workdir / "pubs.csv").write_text(write_publications_csv(journal))
(workdir / "cites.csv").write_text(write_citations_csv(journal))
(workdir / "journal.json").write_text(write_journal_json(journal))
print((workdir / "journal.json").read_text())

# %%
assert parse_journal_json((workdir / "journal.json").read_text()) == journal
assert load_csv((workdir / "pubs.csv").read_text(), (workdir / "cites.csv").read_text(), "J") == journal

# %% [markdown]
# A citation to articles from the future is rejected with its location.

# %%
try:
    load_csv("year,articles\n2015,20\n2016,40\n", "cite_year,pub_year,count\n2015,2016,3\n")
except ParseError as exc:
    print(exc)

# %% [markdown]
# The same computations from the command line.

# %%
def jif(*args):
    proc = subprocess.run([sys.executable, "-m", "jif", *args], capture_output=True, text=True)
    print(f"$ jif {' '.join(args)}\n{proc.stdout}{proc.stderr}(exit {proc.returncode})\n")


src = ["--journal", str(workdir / "journal.json")]
jif("validate", *src)
jif("compute", *src, "--year", "2019")
jif("compute", *src, "--year", "2015", "--method", "garfield")
jif("series", *src, "--method", "total", "--from", "2015", "--to", "2019", "--format", "csv")
